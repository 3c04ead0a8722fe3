#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"

using namespace pcc;

TEST_CASE("adjacency is sorted and deduplicated") {
    Graph g(4);
    g.add_edge(2, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 0);
    CHECK(g.num_edges() == 3);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2, 3});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("factory graphs have the expected shape") {
    Graph p = Graph::path(5);
    CHECK(p.num_edges() == 4);
    Graph c = Graph::cycle(6);
    CHECK(c.num_edges() == 6);
    Graph k = Graph::complete(5);
    CHECK(k.num_edges() == 10);
    Graph gr = Graph::grid(3, 4);
    CHECK(gr.num_vertices() == 12);
    CHECK(gr.num_edges() == 3 * 3 + 2 * 4);
}

TEST_CASE("bfs layering gives distances and layers") {
    Graph c = Graph::cycle(6);
    auto l = bfs_layering(c, 0);
    CHECK(l.root == 0);
    CHECK(l.dist[3] == 3);
    CHECK(l.layers.size() == 4);
    CHECK(l.layers[1] == std::vector<int>{1, 5});
    CHECK(l.eccentricity() == 3);
}

TEST_CASE("geodesics in a cycle") {
    Graph c = Graph::cycle(6);
    auto sp = shortest_path(c, 0, 3);
    CHECK(sp.vertices.size() == 4);
    CHECK(is_geodesic(c, sp));
    VertexPath around;
    around.vertices = {0, 1, 2, 3, 4};
    CHECK(is_path(c, around));
    CHECK(!is_geodesic(c, around));  // 0..4 walks 4 edges, distance is 2
}

TEST_CASE("partition validation catches overlap and gaps") {
    Graph p = Graph::path(4);
    VertexPath a, b;
    a.vertices = {0, 1};
    b.vertices = {2, 3};
    auto part = Partition::from_paths(4, {a, b});
    CHECK(part.num_parts() == 2);
    CHECK(part.part_of[3] == 1);
    validate_partition(p, part);

    VertexPath overlap;
    overlap.vertices = {1, 2};
    CHECK_THROWS_AS(Partition::from_paths(4, {a, overlap}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_paths(4, {a}), std::invalid_argument);
}

TEST_CASE("quotient contracts parts and drops internal edges") {
    Graph p = Graph::path(4);
    auto part = Partition::from_paths(
        4, {VertexPath{{0, 1}, false}, VertexPath{{2, 3}, false}});
    Graph q = quotient(p, part);
    CHECK(q.num_vertices() == 2);
    CHECK(q.num_edges() == 1);
    CHECK(q.has_edge(0, 1));
}

TEST_CASE("components come out sorted") {
    Graph g(5);
    g.add_edge(3, 4);
    g.add_edge(0, 2);
    auto cc = connected_components(g);
    REQUIRE(cc.size() == 3);
    CHECK(cc[0] == std::vector<int>{0, 2});
    CHECK(cc[1] == std::vector<int>{1});
    CHECK(cc[2] == std::vector<int>{3, 4});
    CHECK(!is_connected(g));
    CHECK(is_connected(Graph::path(3)));
}

TEST_CASE("induced subgraph remaps ids") {
    Graph c = Graph::cycle(5);
    auto [h, old_id] = induced_subgraph(c, {1, 2, 4});
    CHECK(h.num_vertices() == 3);
    CHECK(old_id == std::vector<int>{1, 2, 4});
    CHECK(h.num_edges() == 1);  // only 1-2 survives
    CHECK(h.has_edge(0, 1));
}

TEST_CASE("coloring construction normalizes and validates") {
    auto c = make_coloring({0, 2, 2, 5});
    CHECK(c.num_colors == 6);
    CHECK(c.used_colors() == std::vector<int>{0, 2, 5});
    auto cls = c.classes();
    CHECK(cls[2] == std::vector<int>{1, 2});
    CHECK_THROWS_AS(make_coloring({0, -1}), std::invalid_argument);
}

TEST_CASE("tuple dictionary assigns first-appearance ids") {
    TupleDict d;
    CHECK(d.id({1, 2}) == 0);
    CHECK(d.id({3}) == 1);
    CHECK(d.id({1, 2}) == 0);
    CHECK(d.size() == 2);
    auto c = dense_from_tuples({{5, 5}, {1}, {5, 5}});
    CHECK(c.color == std::vector<int>{0, 1, 0});
    CHECK(c.num_colors == 2);
}
