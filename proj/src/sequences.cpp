#include "aperiodica/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <unordered_set>

#include "aperiodica/patches.hpp"

namespace aperiodica {

Word Word::parse(std::string_view marked) {
  Word w;
  bool seen_mark = false;
  for (char ch : marked) {
    if (ch == '|') {
      if (seen_mark) throw Error("word: more than one origin mark");
      seen_mark = true;
      w.origin = w.symbols.size();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    w.symbols.push_back(static_cast<unsigned char>(ch));
  }
  return w;
}

std::string Word::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i == origin) s += '|';
    const int c = symbols[i];
    if (c >= 33 && c < 127) {
      s += static_cast<char>(c);
    } else {
      s += '<' + std::to_string(c) + '>';
    }
  }
  if (origin == symbols.size()) s += '|';
  return s;
}

PointSet seq_to_delone(const Word& word, const std::map<int, double>& lengths) {
  if (word.empty()) throw Error("seq_to_delone: empty word");
  if (word.origin > word.size()) throw Error("seq_to_delone: origin outside word");
  auto length_of = [&](int sym) {
    auto it = lengths.find(sym);
    if (it == lengths.end()) throw Error("seq_to_delone: no length for symbol " + std::to_string(sym));
    if (!(it->second > 0.0) || !std::isfinite(it->second))
      throw Error("seq_to_delone: lengths must be positive and finite");
    return it->second;
  };
  std::vector<double> xs;
  xs.reserve(word.size() + 1);
  xs.push_back(0.0);
  double acc = 0.0;
  for (std::size_t j = word.origin; j < word.size(); ++j) {
    acc += length_of(word.symbols[j]);
    xs.push_back(acc);
  }
  const double right = acc;
  acc = 0.0;
  for (std::size_t j = word.origin; j-- > 0;) {
    acc += length_of(word.symbols[j]);
    xs.push_back(-acc);
  }
  const double left = -acc;
  std::sort(xs.begin(), xs.end());
  Mat pts(1, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) pts(0, static_cast<Eigen::Index>(i)) = xs[i];
  Vec c(1);
  c[0] = 0.5 * (left + right);
  return PointSet(std::move(pts), Region::ball(c, 0.5 * (right - left)), std::nullopt,
                  "sequence " + std::to_string(word.size()) + " letters");
}

namespace {

std::vector<std::size_t> sorted_indices_1d(const PointSet& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.points()(0, static_cast<Eigen::Index>(a)) < p.points()(0, static_cast<Eigen::Index>(b));
  });
  return order;
}

}  // namespace

Word delone_to_seq(const PointSet& p, double r_class) {
  if (p.dim() != 1) throw Error("delone_to_seq: sample must be one-dimensional");
  if (!(r_class > 0.0)) throw Error("delone_to_seq: class radius must be positive");
  const auto zero = p.find(Vec::Zero(1));
  if (!zero) throw Error("delone_to_seq: origin required");
  if (p.region().depth(p.point(*zero)) < r_class) throw Error("delone_to_seq: origin patch crosses region boundary");

  const auto order = sorted_indices_1d(p);
  const auto zpos = static_cast<std::size_t>(std::find(order.begin(), order.end(), *zero) - order.begin());
  auto interior = [&](std::size_t k) { return p.region().depth(p.point(order[k])) >= r_class; };
  // Only the contiguous interior run around the origin is encoded.
  std::size_t first = zpos;
  std::size_t last = zpos;
  while (first > 0 && interior(first - 1)) --first;
  while (last + 1 < order.size() && interior(last + 1)) ++last;

  std::map<Key, int> alphabet;
  Word out;
  out.origin = zpos - first;
  for (std::size_t k = first; k <= last; ++k) {
    Patch patch = patch_at(p, order[k], r_class);
    auto [it, inserted] = alphabet.try_emplace(std::move(patch.key), static_cast<int>(alphabet.size()));
    out.symbols.push_back(it->second);
  }
  // Renumber by first appearance from the left.
  std::map<int, int> rename;
  for (int& s : out.symbols) {
    auto [it, inserted] = rename.try_emplace(s, static_cast<int>(rename.size()));
    s = it->second;
  }
  return out;
}

GapWord gap_word(const PointSet& p) {
  if (p.dim() != 1) throw Error("gap_word: sample must be one-dimensional");
  if (p.size() < 2) throw Error("gap_word: degenerate sample");
  const auto order = sorted_indices_1d(p);
  const double q = p.quantum();
  std::vector<double> gaps;
  std::vector<long long> gap_keys;
  std::size_t origin = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const double a = p.points()(0, static_cast<Eigen::Index>(order[i]));
    const double b = p.points()(0, static_cast<Eigen::Index>(order[i + 1]));
    if (std::abs(a) <= q) origin = i;
    gaps.push_back(b - a);
    gap_keys.push_back(std::llround((b - a) / (1e3 * q)));
  }
  std::map<long long, double> distinct;
  for (std::size_t i = 0; i < gaps.size(); ++i) distinct.try_emplace(gap_keys[i], gaps[i]);
  std::map<long long, int> letter;
  GapWord out;
  for (const auto& [k, len] : distinct) {
    letter.emplace(k, static_cast<int>(out.gap_lengths.size()));
    out.gap_lengths.push_back(len);
  }
  for (long long k : gap_keys) out.word.symbols.push_back(letter.at(k));
  out.word.origin = origin;
  return out;
}

std::vector<std::size_t> factor_complexity(const std::vector<int>& symbols, std::size_t max_len) {
  std::u32string text;
  text.reserve(symbols.size());
  for (int c : symbols) text.push_back(static_cast<char32_t>(c));
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= max_len && n <= text.size(); ++n) {
    std::unordered_set<std::u32string_view> seen;
    std::u32string_view view(text);
    for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(view.substr(i, n));
    out.push_back(seen.size());
  }
  return out;
}

Word fibonacci_word(std::size_t each_side) {
  std::vector<int> left{'b'};
  std::vector<int> right{'a'};
  auto substitute = [](const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size() * 2);
    for (int c : w) {
      out.push_back('a');
      if (c == 'a') out.push_back('b');
    }
    return out;
  };
  while (left.size() < each_side || right.size() < each_side) {
    left = substitute(substitute(left));
    right = substitute(substitute(right));
  }
  Word w;
  w.symbols.assign(left.end() - static_cast<std::ptrdiff_t>(each_side), left.end());
  w.origin = each_side;
  w.symbols.insert(w.symbols.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(each_side));
  return w;
}

Word random_word(const std::vector<int>& letters, const std::vector<double>& probabilities, std::size_t each_side,
                 std::uint64_t seed) {
  if (letters.empty() || letters.size() != probabilities.size())
    throw Error("random_word: letters and probabilities must be nonempty and of equal length");
  double total = 0.0;
  for (double pr : probabilities) {
    if (!(pr >= 0.0)) throw Error("random_word: negative probability");
    total += pr;
  }
  if (!(total > 0.0)) throw Error("random_word: probabilities sum to zero");
  std::vector<double> cumulative;
  double acc = 0.0;
  for (double pr : probabilities) cumulative.push_back(acc += pr / total);
  // Raw engine bits: identical words on every standard library.
  std::mt19937_64 engine(seed);
  Word w;
  w.origin = each_side;
  w.symbols.reserve(2 * each_side);
  for (std::size_t i = 0; i < 2 * each_side; ++i) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && u >= cumulative[k]) ++k;
    w.symbols.push_back(letters[k]);
  }
  return w;
}

}  // namespace aperiodica
