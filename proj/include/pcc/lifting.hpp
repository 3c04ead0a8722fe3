#pragma once

#include <functional>

#include "pcc/coloring.hpp"
#include "pcc/embedding.hpp"
#include "pcc/graph.hpp"

namespace pcc::lift {

// Callback contract: the argument is a connected minor of the original
// input with radius at most 2p; the result must be p-centered on it.
using RadiusColorer = std::function<Coloring(const Graph&, int)>;
using EmbeddedRadiusColorer =
    std::function<Coloring(const planar::Embedding&, int)>;

// Layered lift: BFS layers from a root per component; windows of 2p
// consecutive layers (start divisible by p) with the inner ball contracted
// onto the root get colored by the callback, and every vertex combines its
// layer index mod p+1 with the colors of its two covering windows. Uses at
// most (p+1) * f(p)^2 colors for a callback using f(p).
Coloring layered_lift(const Graph& g, int p, const RadiusColorer& colorer);

// Same construction on an embedded graph: windows are built by restricting
// the rotation system and contracting the inner ball inside it, so the
// callback receives minors embedded in the same surface or a simpler one.
Coloring layered_lift_embedded(const planar::Embedding& e, int p,
                               const EmbeddedRadiusColorer& colorer);

// Product of a within-part position index with a p-centered coloring of
// the quotient: q * f(p) colors for parts of at most q vertices.
Coloring partition_lift(const Graph& g, const Partition& part,
                        const Coloring& quotient_coloring, int p);

// Planar pipeline: layered lift where every window is partitioned into
// geodesics (at most 4p+1 vertices each at radius <= 2p) and the width-<=8
// quotient is colored through its tree decomposition.
Coloring planar_centered_coloring(const Graph& g, const planar::Embedding& e,
                                  int p);

unsigned long long binom_u64(int n, int k);
// binom(p+k, k): color bound of the width-k skeleton coloring.
unsigned long long treewidth_color_bound(int p, int k);
// (p+1) * (4p+1)^2 * binom(p+8, 8)^2
unsigned long long planar_color_bound(int p);

}  // namespace pcc::lift
