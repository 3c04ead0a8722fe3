#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/embedding.hpp"
#include "pcc/graph.hpp"

namespace pcc::surface {

// Cut-graph K of an embedded graph: cutting the surface along K leaves a
// disk, so deleting V(K) from the graph leaves a planar remainder.
struct CutGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  // Partition of `vertices` into at most 4*genus geodesics of the host graph.
  std::vector<VertexPath> geodesic_parts;
  // The 2*genus edges outside both the BFS tree and the dual cotree.
  std::vector<std::pair<int, int>> extra_edges;
};

CutGraph tree_cotree_cut_graph(const Graph& g, const planar::Embedding& e);

Coloring genus_centered_coloring(const Graph& g, const planar::Embedding& e,
                                 int p);

std::uint64_t genus_color_bound(int p, int genus);

}  // namespace pcc::surface
