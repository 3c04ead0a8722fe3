#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pcc/embedding.hpp"
#include "pcc/gen.hpp"
#include "pcc/graph.hpp"
#include "pcc/lifting.hpp"
#include "pcc/surface.hpp"
#include "pcc/verify.hpp"

using namespace pcc;

namespace {

// cut graph contract relative to its embedding
void check_cut_graph(const Graph& g, const planar::Embedding& e,
                     const surface::CutGraph& k) {
    int genus = e.euler_genus;
    CHECK((int)k.extra_edges.size() == 2 * genus);

    // edge and vertex counts satisfy |E| = |V| + 2g - 1 (one cycle per extra)
    CHECK((int)k.edges.size() == (int)k.vertices.size() + 2 * genus - 1);

    // parts: geodesics in g, pairwise disjoint, covering V(K), at most 4g
    CHECK((int)k.geodesic_parts.size() <= 4 * genus);
    std::set<int> covered;
    for (auto& part : k.geodesic_parts) {
        CHECK(is_geodesic(g, part));
        for (int v : part.vertices) {
            CHECK(!covered.count(v));
            covered.insert(v);
        }
    }
    CHECK(covered == std::set<int>(k.vertices.begin(), k.vertices.end()));

    // removing V(K) leaves a planar remainder, certified by the inherited
    // rotation and independently by the edge budget of simple planar graphs
    std::vector<int> rest;
    std::vector<char> in_k(g.num_vertices(), 0);
    for (int v : k.vertices) in_k[v] = 1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in_k[v]) rest.push_back(v);
    if (!rest.empty()) {
        auto [re, old_id] = planar::restrict_embedding(e, rest);
        CHECK(re.euler_genus == 0);
        for (auto& comp : connected_components(re.graph)) {
            if (comp.size() < 3) continue;
            auto [sub, ids] = induced_subgraph(re.graph, comp);
            CHECK(sub.num_edges() <= 3 * (int)comp.size() - 6);
        }
    }
}

}  // namespace

TEST_CASE("toroidal grids yield a two-cycle cut graph") {
    for (int s = 3; s <= 6; ++s) {
        auto e = gen::toroidal_grid_embedding(s, s);
        REQUIRE(e.euler_genus == 1);
        auto k = surface::tree_cotree_cut_graph(e.graph, e);
        check_cut_graph(e.graph, e, k);
    }
}

TEST_CASE("rectangular tori work the same") {
    auto e = gen::toroidal_grid_embedding(3, 7);
    auto k = surface::tree_cotree_cut_graph(e.graph, e);
    check_cut_graph(e.graph, e, k);
}

TEST_CASE("planar input is rejected by the cut graph construction") {
    auto e = gen::grid_embedding(3, 3);
    CHECK_THROWS_AS(surface::tree_cotree_cut_graph(e.graph, e),
                    std::invalid_argument);
}

TEST_CASE("disconnected input is rejected") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto e = planar::trace_faces(g, {{1}, {0}, {3}, {2}});
    CHECK_THROWS_AS(surface::tree_cotree_cut_graph(g, e), std::invalid_argument);
}

TEST_CASE("genus coloring verifies on tori") {
    for (auto [r, c] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{3, 6}}) {
        auto e = gen::toroidal_grid_embedding(r, c);
        for (int p = 1; p <= 2; ++p) {
            auto col = surface::genus_centered_coloring(e.graph, e, p);
            CHECK(verify::check_p_centered(e.graph, col, p).centered);
            CHECK((std::uint64_t)col.num_colors <=
                  surface::genus_color_bound(p, e.euler_genus));
        }
    }
}

TEST_CASE("genus zero inputs route through the planar pipeline") {
    auto e = gen::grid_embedding(4, 5);
    auto col = surface::genus_centered_coloring(e.graph, e, 2);
    CHECK(verify::check_p_centered(e.graph, col, 2).centered);
    CHECK((std::uint64_t)col.num_colors <= lift::planar_color_bound(2));
}

TEST_CASE("bound formula composes the cut width with the planar budget") {
    CHECK(surface::genus_color_bound(2, 0) == lift::planar_color_bound(2));
    std::uint64_t f = 4ull * 1 * 9 + lift::planar_color_bound(2);
    CHECK(surface::genus_color_bound(2, 1) == 3 * f * f);
}

TEST_CASE("parameter validation") {
    auto e = gen::toroidal_grid_embedding(3, 3);
    CHECK_THROWS_AS(surface::genus_centered_coloring(e.graph, e, 0),
                    std::invalid_argument);
}
