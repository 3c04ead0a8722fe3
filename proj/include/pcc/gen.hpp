#pragma once

#include <cstdint>

#include "pcc/embedding.hpp"
#include "pcc/graph.hpp"
#include "pcc/treedecomp.hpp"

namespace pcc::gen {

struct DecomposedGraph {
  Graph g;
  td::TreeDecomposition td;
};

// Random k-tree on n vertices with its natural width-k decomposition, then
// each edge kept with probability keep_prob. Edge removal never invalidates
// the decomposition.
DecomposedGraph random_partial_ktree(int n, int k, double keep_prob,
                                     std::uint64_t seed);

Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Planar compass-order rotations.
planar::Embedding grid_embedding(int rows, int cols);
// Wrap-around grid on the torus; rows, cols >= 3 keeps the graph simple.
planar::Embedding toroidal_grid_embedding(int rows, int cols);
planar::Embedding dodecahedron_embedding();

// Sphere triangulations: repeatedly subdivide a random face with a fresh
// vertex; random_triangulation then applies random diagonal flips.
planar::Embedding stacked_triangulation(int n, std::uint64_t seed);
planar::Embedding random_triangulation(int n, int flips, std::uint64_t seed);

// Keeps each edge with probability keep_prob, preserving the cyclic order of
// the surviving darts.
planar::Embedding drop_random_edges(const planar::Embedding& e,
                                    double keep_prob, std::uint64_t seed);

}  // namespace pcc::gen
