#include "pcc/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pcc::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("io: " + what);
}

// Next content line: skips blank lines and lines whose first non-space
// character is one of `comment_starts`.
bool next_line(std::istream& in, std::string& line,
               const std::string& comment_starts) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (comment_starts.find(line[i]) != std::string::npos) continue;
    return true;
  }
  return false;
}

std::vector<long long> numbers(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x;
  while (ss >> x) out.push_back(x);
  std::string rest;
  if (ss.clear(), ss >> rest) fail("unexpected token '" + rest + "'");
  return out;
}

}  // namespace

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open " + path);
  return f;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) fail("cannot write " + path);
  return f;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_line(in, line, "#")) fail("edge list: missing header");
  auto head = numbers(line);
  if (head.size() != 2 || head[0] < 0 || head[1] < 0)
    fail("edge list: header must be 'n m'");
  Graph g(static_cast<int>(head[0]));
  for (long long i = 0; i < head[1]; ++i) {
    if (!next_line(in, line, "#")) fail("edge list: fewer than m edges");
    auto e = numbers(line);
    if (e.size() != 2) fail("edge list: edge line must be 'u v'");
    g.add_edge(static_cast<int>(e[0]), static_cast<int>(e[1]));
  }
  if (next_line(in, line, "#")) fail("edge list: trailing content");
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

planar::Embedding read_rotation(std::istream& in) {
  std::vector<std::vector<int>> rot;
  std::string line;
  while (std::getline(in, line)) {
    auto nums = numbers(line);
    rot.emplace_back();
    for (long long x : nums) rot.back().push_back(static_cast<int>(x));
  }
  const int n = static_cast<int>(rot.size());
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u : rot[v]) {
      if (u < 0 || u >= n) fail("rotation: neighbor out of range");
      if (u == v) fail("rotation: self-loop");
      g.add_edge(u, v);
    }
  return planar::trace_faces(std::move(g), std::move(rot));
}

void write_rotation(std::ostream& out, const planar::Embedding& e) {
  for (const auto& r : e.rotation) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << r[i] << (i + 1 < r.size() ? " " : "");
    out << '\n';
  }
}

ColoringFile read_coloring(std::istream& in) {
  std::string line;
  ColoringFile out;
  int colors = -1;
  std::vector<std::pair<int, int>> entries;
  int max_v = -1;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') {
      std::istringstream ss(line.substr(i + 1));
      std::string tok;
      while (ss >> tok) {
        if (tok.rfind("colors=", 0) == 0) colors = std::stoi(tok.substr(7));
        if (tok.rfind("p=", 0) == 0) out.p = std::stoi(tok.substr(2));
      }
      continue;
    }
    auto e = numbers(line);
    if (e.size() != 2) fail("coloring: line must be 'v c'");
    int v = static_cast<int>(e[0]), c = static_cast<int>(e[1]);
    if (v < 0 || c < 0) fail("coloring: negative entry");
    entries.push_back({v, c});
    max_v = std::max(max_v, v);
  }
  std::vector<int> col(max_v + 1, -1);
  for (auto [v, c] : entries) {
    if (col[v] != -1) fail("coloring: duplicate vertex " + std::to_string(v));
    col[v] = c;
  }
  for (int v = 0; v <= max_v; ++v)
    if (col[v] == -1) fail("coloring: missing vertex " + std::to_string(v));
  out.coloring = make_coloring(std::move(col));
  if (colors >= 0) {
    if (colors < out.coloring.num_colors)
      fail("coloring: header colors below the maximum used color");
    out.coloring.num_colors = colors;
  }
  return out;
}

void write_coloring(std::ostream& out, const Coloring& c, int p) {
  out << "c colors=" << c.num_colors << " p=" << p << '\n';
  for (int v = 0; v < c.size(); ++v) out << v << ' ' << c.color[v] << '\n';
}

TdFile read_td(std::istream& in) {
  std::string line;
  if (!next_line(in, line, "c")) fail("td: missing 's td' header");
  std::istringstream head(line);
  std::string s, tdtok;
  long long nb = 0, w1 = 0, n = 0;
  if (!(head >> s >> tdtok >> nb >> w1 >> n) || s != "s" || tdtok != "td" ||
      nb < 1 || w1 < 0 || n < 0)
    fail("td: bad header");
  const int b = static_cast<int>(nb);
  std::vector<std::vector<int>> bags(b);
  std::vector<char> seen(b, 0);
  for (int i = 0; i < b; ++i) {
    if (!next_line(in, line, "c")) fail("td: missing bag line");
    std::istringstream ss(line);
    std::string btok;
    long long id;
    if (!(ss >> btok >> id) || btok != "b" || id < 1 || id > b)
      fail("td: bad bag line");
    if (seen[id - 1]) fail("td: duplicate bag id");
    seen[id - 1] = 1;
    long long v;
    while (ss >> v) {
      if (v < 1 || v > n) fail("td: bag vertex out of range");
      bags[id - 1].push_back(static_cast<int>(v - 1));
    }
    std::sort(bags[id - 1].begin(), bags[id - 1].end());
    bags[id - 1].erase(
        std::unique(bags[id - 1].begin(), bags[id - 1].end()),
        bags[id - 1].end());
  }
  std::vector<std::vector<int>> adj(b);
  int edges = 0;
  while (next_line(in, line, "c")) {
    auto e = numbers(line);
    if (e.size() != 2 || e[0] < 1 || e[0] > b || e[1] < 1 || e[1] > b ||
        e[0] == e[1])
      fail("td: bad edge line");
    adj[e[0] - 1].push_back(static_cast<int>(e[1] - 1));
    adj[e[1] - 1].push_back(static_cast<int>(e[0] - 1));
    ++edges;
  }
  if (edges != b - 1) fail("td: edge count is not #bags - 1");

  int root = 0;
  for (int i = 1; i < b; ++i)
    if (bags[i] < bags[root]) root = i;
  TdFile out;
  out.n = static_cast<int>(n);
  out.td.bags = std::move(bags);
  out.td.root = root;
  out.td.parent.assign(b, -2);
  std::vector<int> stack{root};
  out.td.parent[root] = -1;
  int visited = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++visited;
    for (int y : adj[x])
      if (out.td.parent[y] == -2) {
        out.td.parent[y] = x;
        stack.push_back(y);
      }
  }
  if (visited != b) fail("td: bag tree is disconnected");
  return out;
}

void write_td(std::ostream& out, const td::TreeDecomposition& t, int n) {
  std::size_t maxbag = 0;
  for (const auto& bag : t.bags) maxbag = std::max(maxbag, bag.size());
  out << "s td " << t.num_nodes() << ' ' << maxbag << ' ' << n << '\n';
  for (int i = 0; i < t.num_nodes(); ++i) {
    out << "b " << i + 1;
    for (int v : t.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (int i = 0; i < t.num_nodes(); ++i)
    if (t.parent[i] != -1) out << t.parent[i] + 1 << ' ' << i + 1 << '\n';
}

Partition read_partition(std::istream& in) {
  std::string line;
  std::vector<std::vector<int>> parts;
  int max_v = -1;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) fail("partition: missing ':'");
    auto idnums = numbers(line.substr(0, colon));
    if (idnums.size() != 1 || idnums[0] < 0) fail("partition: bad part id");
    std::size_t id = static_cast<std::size_t>(idnums[0]);
    if (parts.size() <= id) parts.resize(id + 1);
    if (!parts[id].empty()) fail("partition: duplicate part id");
    for (long long v : numbers(line.substr(colon + 1))) {
      if (v < 0) fail("partition: negative vertex");
      parts[id].push_back(static_cast<int>(v));
      max_v = std::max(max_v, static_cast<int>(v));
    }
    if (parts[id].empty()) fail("partition: empty part");
  }
  std::vector<VertexPath> paths(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) fail("partition: missing part id");
    paths[i].vertices = std::move(parts[i]);
  }
  return Partition::from_paths(max_v + 1, paths);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    out << i << ':';
    for (int v : p.parts[i].vertices) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace pcc::io
