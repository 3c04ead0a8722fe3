#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pcc/embedding.hpp"
#include "pcc/gen.hpp"
#include "pcc/graph.hpp"

using namespace pcc;
using planar::Embedding;
using planar::trace_faces;

TEST_CASE("triangle has two faces and genus zero") {
    Graph k3 = Graph::complete(3);
    auto e = trace_faces(k3, {{1, 2}, {0, 2}, {0, 1}});
    CHECK(e.num_faces() == 2);
    CHECK(e.euler_genus == 0);
    CHECK(e.face_of(0, 1) != e.face_of(1, 0));
}

TEST_CASE("isolated vertices count as faces per component") {
    Graph g(3);  // three isolated vertices: c=3, V-E+F = 3+3 = 2*3 - 0
    auto e = trace_faces(g, {{}, {}, {}});
    CHECK(e.num_faces() == 3);
    CHECK(e.euler_genus == 0);
}

TEST_CASE("rotation must match the graph") {
    Graph p2 = Graph::path(2);
    CHECK_THROWS_AS(trace_faces(p2, {{1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(trace_faces(p2, {{1}, {0, 0}}), std::invalid_argument);
    auto e = trace_faces(p2, {{1}, {0}});
    CHECK(e.num_faces() == 1);
    Graph other = Graph::path(3);
    CHECK_THROWS_AS(planar::require_embedding_of(other, e), std::invalid_argument);
}

TEST_CASE("grid embeddings are planar with the right face count") {
    auto e = gen::grid_embedding(3, 3);
    CHECK(e.euler_genus == 0);
    CHECK(e.num_faces() == 5);  // 4 cells + outer
    auto big = gen::grid_embedding(6, 4);
    CHECK(big.euler_genus == 0);
    CHECK(big.num_faces() == 5 * 3 + 1);
}

TEST_CASE("toroidal grid has genus one and quadrilateral faces") {
    auto e = gen::toroidal_grid_embedding(3, 3);
    CHECK(e.graph.num_vertices() == 9);
    CHECK(e.graph.num_edges() == 18);
    CHECK(e.num_faces() == 9);
    CHECK(e.euler_genus == 1);
    auto f = gen::toroidal_grid_embedding(4, 5);
    CHECK(f.euler_genus == 1);
    CHECK(f.num_faces() == 20);
}

TEST_CASE("dodecahedron is a planar cubic graph with twelve faces") {
    auto e = gen::dodecahedron_embedding();
    CHECK(e.graph.num_vertices() == 20);
    CHECK(e.graph.num_edges() == 30);
    CHECK(e.num_faces() == 12);
    CHECK(e.euler_genus == 0);
    for (int v = 0; v < 20; ++v) CHECK(e.graph.degree(v) == 3);
    for (auto& face : e.faces) CHECK(face.size() == 5);
}

TEST_CASE("restriction keeps cyclic order and never raises genus") {
    auto e = gen::grid_embedding(4, 4);
    std::vector<int> keep;
    for (int v = 0; v < 16; ++v)
        if (v % 5 != 4) keep.push_back(v);
    auto [r, old_id] = planar::restrict_embedding(e, keep);
    CHECK(r.graph.num_vertices() == (int)keep.size());
    CHECK(r.euler_genus == 0);
    for (int i = 0; i < r.graph.num_vertices(); ++i)
        for (int j : r.graph.neighbors(i))
            CHECK(e.graph.has_edge(old_id[i], old_id[j]));
}

TEST_CASE("restricting a torus to a planar patch certifies a disk") {
    auto e = gen::toroidal_grid_embedding(4, 4);
    std::vector<int> patch;  // a 2x4 band does not wrap vertically
    for (int v = 0; v < 8; ++v) patch.push_back(v);
    auto [r, old_id] = planar::restrict_embedding(e, patch);
    CHECK(r.euler_genus == 0);
}

TEST_CASE("contraction merges a connected set into one vertex") {
    auto e = gen::grid_embedding(3, 3);
    auto res = planar::contract_connected(e, {0, 1, 3}, 0);
    CHECK(res.emb.graph.num_vertices() == 7);
    CHECK(res.emb.euler_genus == 0);
    CHECK(res.old_id[res.blob] == 0);
    // neighbors of the blob are the outside neighbors of the contracted set
    std::vector<int> nb;
    for (int j : res.emb.graph.neighbors(res.blob)) nb.push_back(res.old_id[j]);
    std::sort(nb.begin(), nb.end());
    CHECK(nb == std::vector<int>{2, 4, 6});
}

TEST_CASE("triangulation makes every face a triangle without new vertices") {
    for (auto e : {gen::grid_embedding(3, 4), gen::grid_embedding(5, 5)}) {
        auto t = planar::triangulate(e);
        CHECK(t.emb.graph.num_vertices() == e.graph.num_vertices());
        CHECK(t.emb.euler_genus == 0);
        for (auto& face : t.emb.faces) CHECK(face.size() == 3);
        int n = e.graph.num_vertices();
        CHECK(t.emb.graph.num_edges() == 3 * n - 6);
        for (auto [u, v] : t.added_edges) {
            CHECK(!e.graph.has_edge(u, v));
            CHECK(t.is_added(u, v));
            CHECK(t.is_added(v, u));
        }
        CHECK(!t.is_added(0, 1));
    }
}

TEST_CASE("triangulating a path subdivides its single face") {
    Graph p4 = Graph::path(4);
    auto e = trace_faces(p4, {{1}, {0, 2}, {1, 3}, {2}});
    CHECK(e.num_faces() == 1);
    auto t = planar::triangulate(e);
    CHECK(t.emb.graph.num_edges() == 3 * 4 - 6);
    for (auto& face : t.emb.faces) CHECK(face.size() == 3);
}

TEST_CASE("random triangulations stay triangulations after flips") {
    for (unsigned seed : {0u, 3u, 8u}) {
        auto e = gen::random_triangulation(30, 90, seed);
        CHECK(e.graph.num_vertices() == 30);
        CHECK(e.euler_genus == 0);
        CHECK(e.graph.num_edges() == 3 * 30 - 6);
        for (auto& face : e.faces) CHECK(face.size() == 3);
    }
}

TEST_CASE("dropping edges keeps a valid embedding") {
    auto e = gen::grid_embedding(5, 5);
    auto d = gen::drop_random_edges(e, 0.6, 7);
    CHECK(d.euler_genus == 0);
    CHECK(d.graph.num_edges() <= e.graph.num_edges());
    planar::require_embedding_of(d.graph, d);
}
