#pragma once

#include "pcc/embedding.hpp"
#include "pcc/treedecomp.hpp"

namespace pcc::planar {

struct GeodesicPartition {
  Partition partition;  // every part a geodesic in the input graph
  td::TreeDecomposition quotient_td;  // width <= 8, bags hold part ids
};

// Partitions a genus-0 embedded graph into geodesics whose quotient has
// treewidth at most 8, together with a witnessing tree decomposition.
// Works per component; overall O(n^2).
GeodesicPartition planar_geodesic_partition(const Graph& g,
                                            const Embedding& e);

}  // namespace pcc::planar
