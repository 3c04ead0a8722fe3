#pragma once

#include <optional>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"

namespace pcc::verify {

// Failure witness: a connected vertex set using at most p colors in which no
// color appears exactly once.
struct CenteredVerdict {
  bool centered = true;
  std::vector<int> counterexample;       // empty when centered
  std::vector<int> counterexample_colors;
};

// Exact check that c is p-centered on g. Works subset-by-subset over the
// used colors: inside each color subset, every component must own a vertex
// of unique color, which is deleted before recursing. Counterexamples are
// greedily minimized before being reported.
CenteredVerdict check_p_centered(const Graph& g, const Coloring& c, int p);

// Brute-force oracle: enumerates every connected induced subgraph. Only for
// small n (guarded at 20).
CenteredVerdict check_p_centered_naive(const Graph& g, const Coloring& c,
                                       int p);

// Rooted forest on a vertex subset, encoded over original vertex ids.
struct TreedepthForest {
  std::vector<int> vertices;  // members, sorted
  std::vector<int> parent;    // parallel to vertices; -1 at roots
  std::vector<int> depth;     // root depth = 1

  int max_depth() const;
  int index_of(int v) const;  // -1 when absent
};

// Elimination forest of G[c^-1(x)] extracted from a p-centered coloring:
// the unique-color vertex of each component becomes the root, then recurse
// on the rest. Depth is at most |x|. Throws if some component has no
// uniquely colored vertex.
TreedepthForest treedepth_forest_from_coloring(const Graph& g,
                                               const Coloring& c,
                                               const std::vector<int>& x);

// Exact minimum number of colors of any p-centered coloring, by canonical
// backtracking with centeredness pruning. Guarded at n <= 12.
int min_p_centered_colors(const Graph& g, int p);

}  // namespace pcc::verify
