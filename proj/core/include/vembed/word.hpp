#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vembed/error.hpp"

namespace vembed {

/// One syllable of a free-group word: variable index (1-based) and a
/// non-zero exponent.
struct Letter {
  int var = 0;
  long long exp = 0;
  bool operator==(const Letter&) const = default;
};

/// A freely reduced word over x1, x2, ... . Adjacent letters with equal
/// variable are merged and zero exponents dropped, so equality of the
/// letter sequences is equality of words.
class Word {
public:
  Word() = default;  // the empty word

  static Word generator(int var, long long exp = 1);
  static Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word power(long long k) const;
  /// Renames every variable x_i to x_{i+offset}.
  Word shift_variables(int offset) const;

  const std::vector<Letter>& letters() const { return letters_; }
  int arity() const;
  bool is_empty() const { return letters_.empty(); }

  std::string str() const;
  bool operator==(const Word&) const = default;

private:
  void push_letter(int var, long long exp);
  std::vector<Letter> letters_;
};

class WordSet {
public:
  WordSet() = default;
  explicit WordSet(std::vector<Word> words) : words_(std::move(words)) {}

  const std::vector<Word>& words() const { return words_; }
  bool non_trivial() const;
  int max_arity() const;
  std::string str() const;
  bool operator==(const WordSet&) const = default;

private:
  std::vector<Word> words_;
};

/// Parses the word DSL: variables `x1`, `x2`, ...; `*` for juxtaposition;
/// `^k` for integer powers; `[u,v]` for commutators; parentheses.
Word parse_word(std::string_view text);

/// `{w1; w2; ...}` or a single bare word.
WordSet parse_word_set(std::string_view text);

/// The solvability word: level 0 is x1, level l+1 is the commutator of two
/// disjoint-variable copies of level l. Arity is 2^l.
Word derived_word(int level, int level_bound = 10);

/// Left-normed commutator [x1, x2, ..., x_{c+1}] of arity c+1.
Word lower_central_word(int c);

template <typename Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::Element& a,
                            const typename Ops::Element& b) {
  { ops.identity() } -> std::same_as<typename Ops::Element>;
  { ops.multiply(a, b) } -> std::same_as<typename Ops::Element>;
  { ops.inverse(a) } -> std::same_as<typename Ops::Element>;
};

/// Substitutes assignment[i] for x_{i+1} and multiplies left to right.
template <GroupOps Ops>
typename Ops::Element evaluate_word(const Word& w,
                                    std::span<const typename Ops::Element> assignment,
                                    const Ops& ops) {
  if (w.arity() > static_cast<int>(assignment.size())) {
    throw Error("assignment shorter than word arity");
  }
  auto acc = ops.identity();
  for (const Letter& letter : w.letters()) {
    const auto& base = assignment[static_cast<std::size_t>(letter.var - 1)];
    auto factor = letter.exp < 0 ? ops.inverse(base) : base;
    long long reps = letter.exp < 0 ? -letter.exp : letter.exp;
    for (long long i = 0; i < reps; ++i) acc = ops.multiply(acc, factor);
  }
  return acc;
}

}  // namespace vembed
