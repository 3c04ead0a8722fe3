#pragma once

#include <map>
#include <vector>

namespace pcc {

// Vertex coloring with dense color ids 0..num_colors-1.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  int size() const { return static_cast<int>(color.size()); }
  std::vector<int> used_colors() const;
  std::vector<std::vector<int>> classes() const;
};

Coloring make_coloring(std::vector<int> color);

// Canonicalizes tuple-valued colors to dense ids in order of first
// appearance over vertex ids 0..n-1.
class TupleDict {
 public:
  int id(const std::vector<int>& tuple);
  int size() const { return static_cast<int>(dict_.size()); }

 private:
  std::map<std::vector<int>, int> dict_;
};

Coloring dense_from_tuples(const std::vector<std::vector<int>>& tuples);

}  // namespace pcc
