#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"

namespace pcc::td {

// Rooted tree decomposition; bags hold sorted vertex lists.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;  // -1 at the root
  int root = 0;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  std::vector<std::vector<int>> children() const;
  // beta(x) ∩ beta(parent(x)); empty at the root.
  std::vector<int> adhesion_set(int x) const;
  // beta(x) minus the adhesion.
  std::vector<int> margin(int x) const;
  int width() const;
  int max_adhesion() const;
};

struct TdStats {
  bool valid = true;
  int width = -1;
  int adhesion = 0;
  std::string violation;  // first violated condition, empty when valid
};

// Checks tree shape, vertex connectivity (T1) and edge coverage (T2).
TdStats validate_td(const Graph& g, const TreeDecomposition& td);

// Home node x(u): the unique root-most node whose bag contains u.
// Requires a valid decomposition.
std::vector<int> home_nodes(const TreeDecomposition& td, int n);

// Splits every margin into a chain of single-vertex steps and contracts
// adjacent equal bags; width is preserved and adhesion drops to <= width.
TreeDecomposition normalize_td(const TreeDecomposition& td);

// G[beta(x)] plus cliques on the adhesions of x and of its children.
// Vertices are relabeled by sorted bag order; second result maps back.
std::pair<Graph, std::vector<int>> torso(const Graph& g,
                                         const TreeDecomposition& td, int x);

// Acyclic digraph with one arc (u, v) for every node x, u in margin(x),
// v in adhesion(x). Arcs point from a vertex toward the root side, so the
// out-degree of u is |adhesion(x(u))|.
struct SkeletonDag {
  std::vector<std::vector<int>> out;

  int num_vertices() const { return static_cast<int>(out.size()); }
};

SkeletonDag skeleton(const TreeDecomposition& td, int n);

// Colors the skeleton so that every directed path of length <= p is
// rainbow: take the p-step transitive closure, then color greedily with the
// smallest color absent from the closure out-neighborhood, visiting
// vertices only after all their out-neighbors. With out-degree <= k the
// count stays below binom(p+k, k).
Coloring skeleton_coloring(const SkeletonDag& s, int p, int k);

// Reachability sets within <= p arcs, sorted; reach[u] includes u.
std::vector<std::vector<int>> skeleton_closure(const SkeletonDag& s, int p);

// p-centered coloring of a width-k graph: normalize, then color the
// skeleton. Uses at most binom(p+k, k) colors.
Coloring treewidth_centered_coloring(const Graph& g,
                                     const TreeDecomposition& td, int p);

using TorsoColorer = std::function<Coloring(const Graph&, int)>;

// Product lift over a decomposition of bounded adhesion: pairs the skeleton
// coloring with a torso coloring of the home bag of every vertex.
Coloring lift_over_td(const Graph& g, const TreeDecomposition& td,
                      const TorsoColorer& torso_colorer, int p);

}  // namespace pcc::td
