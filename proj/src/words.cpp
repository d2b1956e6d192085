#include "thuelab/words.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "thuelab/graph.hpp"

namespace thuelab {

Colouring::Colouring(std::vector<int> c) : colours(std::move(c)) {
  palette_size = 0;
  for (int x : colours) palette_size = std::max(palette_size, x + 1);
}

Colouring::Colouring(std::vector<int> c, int palette) : colours(std::move(c)), palette_size(palette) {}

int Colouring::used() const {
  std::vector<int> s;
  for (int x : colours)
    if (x >= 0) s.push_back(x);
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

Colouring compact(const std::vector<int>& colours) {
  std::vector<int> s(colours);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> out(colours.size());
  for (std::size_t i = 0; i < colours.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(s.begin(), s.end(), colours[i]) - s.begin());
  return Colouring(std::move(out), static_cast<int>(s.size()));
}

ListAssignment ListAssignment::uniform(int n, int k) {
  ListAssignment l;
  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i;
  l.lists.assign(n, base);
  return l;
}

int ListAssignment::min_size() const {
  if (lists.empty()) return 0;
  std::size_t m = lists[0].size();
  for (const auto& x : lists) m = std::min(m, x.size());
  return static_cast<int>(m);
}

bool ListAssignment::is_uniform() const {
  for (const auto& x : lists)
    if (x != lists[0]) return false;
  return true;
}

namespace {

const std::array<Word, 3> kBlocks = {
    Word{0, 1, 2, 1, 0, 2, 1, 2, 0, 1, 2, 1, 0},
    Word{1, 2, 0, 2, 1, 0, 2, 0, 1, 2, 0, 2, 1},
    Word{2, 0, 1, 0, 2, 1, 0, 1, 2, 0, 1, 0, 2},
};

}  // namespace

const Word& leech_block(int i) {
  if (i < 0 || i > 2) throw InputError("block index must be 0, 1 or 2");
  return kBlocks[i];
}

Word thue_word(std::size_t len, ThueMethod method) {
  Word w;
  if (method == ThueMethod::leech) {
    w = {0};
    while (w.size() < len) {
      Word next;
      next.reserve(w.size() * 13);
      for (int s : w) next.insert(next.end(), kBlocks[s].begin(), kBlocks[s].end());
      w = std::move(next);
    }
    w.resize(len);
    return w;
  }
  w.resize(len);
  auto tm = [](std::uint64_t i) { return std::popcount(i) & 1; };
  for (std::size_t i = 0; i < len; ++i) w[i] = tm(i + 1) - tm(i) + 1;
  return w;
}

Word insert_separators(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    if (i % 2 == 1) out.push_back(3);
  }
  return out;
}

std::vector<int> path_sigma4(int n) {
  if (n < 0) throw InputError("negative path length");
  Word base = thue_word(static_cast<std::size_t>(n), ThueMethod::leech);
  Word out = insert_separators(base);
  out.resize(n);
  return out;
}

std::optional<SquareHit> find_square(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t h = 1; 2 * h <= n; ++h)
    for (std::size_t i = 0; i + 2 * h <= n; ++i) {
      std::size_t k = 0;
      while (k < h && w[i + k] == w[i + h + k]) ++k;
      if (k == h) return SquareHit{i, h};
    }
  return std::nullopt;
}

bool suffix_square_free(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    std::size_t i = n - 2 * h;
    std::size_t k = h;
    while (k > 0 && w[i + k - 1] == w[i + h + k - 1]) --k;
    if (k == 0) return false;
  }
  return true;
}

std::vector<Word> enumerate_square_free(int t, int r, std::size_t limit) {
  if (t < 1 || r < 1) throw InputError("word length and alphabet size must be positive");
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int s = 0; s < r && out.size() < limit; ++s) {
      cur.push_back(s);
      if (suffix_square_free(cur)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::string word_string(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digits) {
      s += static_cast<char>('0' + w[i]);
    } else {
      if (i) s += ' ';
      s += std::to_string(w[i]);
    }
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      w.push_back(c - '0');
    } else if (c != ' ' && c != '\n' && c != '\t' && c != '\r') {
      throw InputError(std::string("unexpected character '") + c + "' in word");
    }
  }
  return w;
}

}  // namespace thuelab
