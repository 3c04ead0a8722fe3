#pragma once

#include <unordered_map>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc::planar {

// Combinatorial embedding: for every vertex, its neighbors in cyclic order.
// Faces are the orbits of the walk that, arriving at v along u->v, leaves
// by the neighbor following u in the rotation of v.
struct Embedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<std::pair<int, int>>> faces;  // dart walks
  int euler_genus = 0;  // from |V| - |E| + |F| = 2c - 2g, c = #components

  int num_faces() const { return static_cast<int>(faces.size()); }
  // Face whose boundary walk contains the dart u->v.
  int face_of(int u, int v) const;

 private:
  friend Embedding trace_faces(Graph g, std::vector<std::vector<int>> rot);
  std::unordered_map<long long, int> dart_face_;
};

// Validates the rotation against the graph and computes faces and genus.
Embedding trace_faces(Graph g, std::vector<std::vector<int>> rotation);

// Throws unless e embeds exactly the graph g (same vertices and edges).
void require_embedding_of(const Graph& g, const Embedding& e);

// Induced sub-embedding on the kept vertices (cyclic orders filtered);
// second result maps new ids to old. Never increases the genus of any
// component.
std::pair<Embedding, std::vector<int>> restrict_embedding(
    const Embedding& e, const std::vector<int>& keep);

struct ContractionResult {
  Embedding emb;
  std::vector<int> old_id;  // per new vertex; the blob reports rep
  int blob = -1;            // new id of the contracted set
};

// Contracts a connected vertex set onto its representative by a sequence of
// embedded edge contractions, then deletes the loops and parallel edges the
// merge produced. Genus never increases.
ContractionResult contract_connected(const Embedding& e,
                                     const std::vector<int>& set, int rep);

struct Triangulation {
  Embedding emb;
  std::vector<std::pair<int, int>> added_edges;  // sorted u < v pairs

  bool is_added(int u, int v) const;
};

// Adds chords inside faces until every face (outer included) is a triangle.
// Requires a connected genus-0 embedding with at least 3 vertices; throws
// when a degenerate face admits no chord.
Triangulation triangulate(const Embedding& e);

}  // namespace pcc::planar
