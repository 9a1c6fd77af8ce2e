#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aperiodica/pointset.hpp"

namespace aperiodica {

// Two-sided finite word; symbols[origin] is the letter at index 0.
struct Word {
  std::vector<int> symbols;
  std::size_t origin = 0;

  // "ab|ab": letters are characters, '|' marks the origin (default: front).
  static Word parse(std::string_view marked);
  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  // Renders symbols as characters when printable, with '|' at the origin.
  std::string to_string() const;
};

// Tiles the line with intervals of the prescribed lengths in word order:
// {0} ∪ {partial sums to the right} ∪ {negated partial sums to the left}.
PointSet seq_to_delone(const Word& word, const std::map<int, double>& lengths);

// Sequence of patch classes (P - x_n) ∩ B_r along the interior points of a
// 1D sample; classes are numbered by first appearance from the left and the
// origin index is the position of the point 0.
Word delone_to_seq(const PointSet& p, double r_class);

// Gap-letter sequence of a 1D sample: letter i is the i-th shortest distinct
// gap. origin indexes the gap to the right of 0 when 0 is a point.
struct GapWord {
  Word word;
  std::vector<double> gap_lengths;
};
GapWord gap_word(const PointSet& p);

// Number of distinct factors of each length 1..max_len.
std::vector<std::size_t> factor_complexity(const std::vector<int>& symbols, std::size_t max_len);

// Two-sided fixed point of a -> ab, b -> a grown from the legal seed b|a,
// with at least `each_side` letters on both sides. Letters are 'a' and 'b'.
Word fibonacci_word(std::size_t each_side);

// i.i.d. word over `letters` with the given probabilities.
Word random_word(const std::vector<int>& letters, const std::vector<double>& probabilities, std::size_t each_side,
                 std::uint64_t seed);

}  // namespace aperiodica
