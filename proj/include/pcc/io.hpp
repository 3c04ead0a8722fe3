#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "pcc/coloring.hpp"
#include "pcc/embedding.hpp"
#include "pcc/graph.hpp"
#include "pcc/treedecomp.hpp"

namespace pcc::io {

std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

// Edge list: "n m" header, then m lines "u v", 0-indexed. '#' starts a
// comment line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Rotation system: n lines, line i holds the neighbors of vertex i in cyclic
// order. Faces are traced on load, so invalid systems are rejected here.
planar::Embedding read_rotation(std::istream& in);
void write_rotation(std::ostream& out, const planar::Embedding& e);

// Coloring: header "c colors=<k> p=<p>", then lines "v c", 0-indexed.
struct ColoringFile {
  Coloring coloring;
  int p = 0;
};
ColoringFile read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c, int p);

// PACE-2017 tree decomposition: "s td <#bags> <width+1> <n>", bag lines
// "b <id> v...", then bag-tree edge lines; ids and vertices are 1-indexed.
// Files carry an unrooted tree; the root is fixed deterministically at the
// lexicographically smallest bag.
struct TdFile {
  td::TreeDecomposition td;
  int n = 0;
};
TdFile read_td(std::istream& in);
void write_td(std::ostream& out, const td::TreeDecomposition& t, int n);

// Partition: one line per part, "part_id: v1 v2 ...". Geodesic witness flags
// are not serialized.
Partition read_partition(std::istream& in);
void write_partition(std::ostream& out, const Partition& p);

}  // namespace pcc::io
