#include "pcc/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcc {

std::vector<int> Coloring::used_colors() const {
  std::vector<char> seen(num_colors, 0);
  for (int c : color) seen[c] = 1;
  std::vector<int> out;
  for (int c = 0; c < num_colors; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> cls(num_colors);
  for (int v = 0; v < size(); ++v) cls[color[v]].push_back(v);
  return cls;
}

Coloring make_coloring(std::vector<int> color) {
  Coloring c;
  c.color = std::move(color);
  for (int x : c.color) {
    if (x < 0) throw std::invalid_argument("make_coloring: negative color");
    c.num_colors = std::max(c.num_colors, x + 1);
  }
  return c;
}

int TupleDict::id(const std::vector<int>& tuple) {
  auto it = dict_.find(tuple);
  if (it != dict_.end()) return it->second;
  int fresh = static_cast<int>(dict_.size());
  dict_.emplace(tuple, fresh);
  return fresh;
}

Coloring dense_from_tuples(const std::vector<std::vector<int>>& tuples) {
  TupleDict dict;
  Coloring c;
  c.color.reserve(tuples.size());
  for (const auto& t : tuples) c.color.push_back(dict.id(t));
  c.num_colors = dict.size();
  return c;
}

}  // namespace pcc
