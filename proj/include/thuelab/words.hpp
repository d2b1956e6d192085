#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "thuelab/colouring.hpp"

namespace thuelab {

enum class ThueMethod { leech, tm_diff };

// The three 13-symbol substitution blocks.
const Word& leech_block(int i);

// Square-free word over {0,1,2} of exactly len symbols.
Word thue_word(std::size_t len, ThueMethod method = ThueMethod::leech);

// Inserts symbol 3 after every second symbol of a word over {0,1,2}.
Word insert_separators(const Word& w);

// Walk-nonrepetitive 4-colouring of the path v0..v(n-1).
std::vector<int> path_sigma4(int n);

struct SquareHit {
  std::size_t start = 0;
  std::size_t half = 0;
};

// Smallest square by (half-length, start).
std::optional<SquareHit> find_square(const Word& w);

// True if appending w.back() created no square ending at the last symbol.
bool suffix_square_free(const Word& w);

// Square-free words over {0..r-1} of length t in lexicographic order, at most limit of them.
std::vector<Word> enumerate_square_free(int t, int r, std::size_t limit);

std::string word_string(const Word& w);
Word parse_word(const std::string& s);

}  // namespace thuelab
