#pragma once

#include <vector>

namespace thuelab {

using Word = std::vector<int>;

// Vertex colouring; negative entries mark uncoloured vertices in partial colourings.
struct Colouring {
  std::vector<int> colours;
  int palette_size = 0;

  Colouring() = default;
  explicit Colouring(std::vector<int> c);
  Colouring(std::vector<int> c, int palette);

  int size() const { return static_cast<int>(colours.size()); }
  int operator[](int v) const { return colours[v]; }
  // Number of distinct colours in use.
  int used() const;
};

// Relabels colours to 0..k-1 preserving their order.
Colouring compact(const std::vector<int>& colours);

struct ListAssignment {
  std::vector<std::vector<int>> lists;

  static ListAssignment uniform(int n, int k);
  int size() const { return static_cast<int>(lists.size()); }
  int min_size() const;
  bool is_uniform() const;
};

}  // namespace thuelab
