#include "vembed/lazy_group.hpp"

#include <algorithm>
#include <numeric>

#include "vembed/error.hpp"

namespace vembed {

HeisenbergElement h3_multiply(const HeisenbergElement& x, const HeisenbergElement& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
}

HeisenbergElement h3_inverse(const HeisenbergElement& x) {
  return {-x.a, -x.b, -x.c + x.a * x.b};
}

LazyGroup::LazyGroup(Kind kind, long long param) : kind_(kind), param_(param) {
  if (param_ < 1) throw Error("distinguished element parameter must be positive");
}

LazyGroup LazyGroup::integers(long long unit) { return LazyGroup(Kind::integers, unit); }
LazyGroup LazyGroup::heisenberg(long long central) {
  return LazyGroup(Kind::heisenberg, central);
}

LazyGroup::Element LazyGroup::identity() const {
  if (kind_ == Kind::integers) return Element{0ll};
  return Element{HeisenbergElement{}};
}

LazyGroup::Element LazyGroup::multiply(const Element& x, const Element& y) const {
  if (kind_ == Kind::integers) return Element{std::get<long long>(x) + std::get<long long>(y)};
  return Element{h3_multiply(std::get<HeisenbergElement>(x), std::get<HeisenbergElement>(y))};
}

LazyGroup::Element LazyGroup::inverse(const Element& x) const {
  if (kind_ == Kind::integers) return Element{-std::get<long long>(x)};
  return Element{h3_inverse(std::get<HeisenbergElement>(x))};
}

bool LazyGroup::equal(const Element& x, const Element& y) const { return x == y; }

bool LazyGroup::is_identity(const Element& x) const { return equal(x, identity()); }

LazyGroup::Element LazyGroup::distinguished() const { return distinguished_power(1); }

LazyGroup::Element LazyGroup::distinguished_power(long long i) const {
  if (kind_ == Kind::integers) return Element{param_ * i};
  return Element{HeisenbergElement{0, 0, param_ * i}};
}

namespace {

// --- integers enumeration, a = d ------------------------------------------
// Tail: alpha(i) = d*i for i <= 0. Positive indices enumerate the complement
// { +n } ∪ { -n : d does not divide n } shell by shell (n = 1, 2, ...),
// +n before -n. Cumulative count over shells 1..n: 2n - floor(n/d).

long long z_cum(long long n, long long d) { return 2 * n - n / d; }

long long z_shell_for_index(long long i, long long d) {
  long long lo = 1, hi = i + 1;  // z_cum(i+1) >= i always
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (z_cum(mid, d) >= i) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// --- Heisenberg enumeration, a = (0,0,t) -----------------------------------
// Tail: alpha(i) = (0,0,t*i) for i <= 0. Positive indices enumerate
// Z^3 minus the tail, shell r = max(|a|,|b|,|c|) = 1, 2, ..., lexicographic
// within a shell, skipping the tail point (0,0,-r) when t divides r.
// Full shell size: (2r+1)^3 - (2r-1)^3 = 24r^2 + 2.

long long h_cum(long long r, long long t) {
  // sum over s=1..r of (24 s^2 + 2) minus the skipped tail points
  return 4 * r * (r + 1) * (2 * r + 1) + 2 * r - r / t;
}

long long h_shell_for_index(long long i, long long t) {
  long long lo = 1, hi = 1;
  while (h_cum(hi, t) < i) hi *= 2;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (h_cum(mid, t) >= i) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// 1-based lexicographic position of (a,b,c) within the full shell r.
long long h_shell_rank(long long r, const HeisenbergElement& e) {
  long long rank = 1;
  long long side = 2 * r + 1;
  long long face = side * side;             // block size when |a| = r
  long long ring = face - (2 * r - 1) * (2 * r - 1);  // block size when |a| < r
  for (long long a = -r; a < e.a; ++a) rank += (std::abs(a) == r) ? face : ring;
  if (std::abs(e.a) == r) {
    rank += (e.b + r) * side + (e.c + r);
    return rank;
  }
  for (long long b = -r; b < e.b; ++b) rank += (std::abs(b) == r) ? side : 2;
  if (std::abs(e.b) == r) {
    rank += e.c + r;
  } else {
    rank += (e.c == r) ? 1 : 0;
  }
  return rank;
}

HeisenbergElement h_shell_unrank(long long r, long long q) {
  long long side = 2 * r + 1;
  long long face = side * side;
  long long ring = face - (2 * r - 1) * (2 * r - 1);
  for (long long a = -r; a <= r; ++a) {
    long long block = (std::abs(a) == r) ? face : ring;
    if (q > block) { q -= block; continue; }
    if (std::abs(a) == r) {
      long long b = -r + (q - 1) / side;
      long long c = -r + (q - 1) % side;
      return {a, b, c};
    }
    for (long long b = -r; b <= r; ++b) {
      long long row = (std::abs(b) == r) ? side : 2;
      if (q > row) { q -= row; continue; }
      long long c = (std::abs(b) == r) ? -r + (q - 1) : (q == 1 ? -r : r);
      return {a, b, c};
    }
  }
  throw Error("shell rank out of range");
}

long long h_max_norm(const HeisenbergElement& e) {
  return std::max({std::abs(e.a), std::abs(e.b), std::abs(e.c)});
}

}  // namespace

LazyGroup::Element LazyGroup::element_at(long long index) const {
  if (index <= 0) return distinguished_power(index);
  if (kind_ == Kind::integers) {
    long long n = z_shell_for_index(index, param_);
    long long q = index - z_cum(n - 1, param_);
    return Element{q == 1 ? n : -n};
  }
  long long r = h_shell_for_index(index, param_);
  long long rank = index - h_cum(r - 1, param_);
  if (r % param_ == 0) {
    long long skip = h_shell_rank(r, {0, 0, -r});
    if (rank >= skip) ++rank;
  }
  return Element{h_shell_unrank(r, rank)};
}

long long LazyGroup::index_of(const Element& x) const {
  if (kind_ == Kind::integers) {
    long long v = std::get<long long>(x);
    if (v <= 0 && v % param_ == 0) return v / param_;
    long long n = std::abs(v);
    return z_cum(n - 1, param_) + (v > 0 ? 1 : 2);
  }
  const auto& e = std::get<HeisenbergElement>(x);
  if (e.a == 0 && e.b == 0 && e.c <= 0 && e.c % param_ == 0) return e.c / param_;
  long long r = h_max_norm(e);
  long long rank = h_shell_rank(r, e);
  if (r % param_ == 0) {
    long long skip = h_shell_rank(r, {0, 0, -r});
    if (rank > skip) --rank;
  }
  return h_cum(r - 1, param_) + rank;
}

std::string LazyGroup::show(const Element& x) const {
  if (kind_ == Kind::integers) return "Z:" + std::to_string(std::get<long long>(x));
  const auto& e = std::get<HeisenbergElement>(x);
  return "H3:(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," +
         std::to_string(e.c) + ")";
}

namespace {

// Exponent sum of each variable in a word.
std::vector<long long> exponent_sums(const Word& w) {
  std::vector<long long> sums(static_cast<std::size_t>(w.arity()), 0);
  for (const Letter& l : w.letters()) sums[static_cast<std::size_t>(l.var - 1)] += l.exp;
  return sums;
}

struct ExtGcd {
  long long g, x, y;  // g = x*a + y*b, g >= 0
};

ExtGcd ext_gcd(long long a, long long b) {
  if (b == 0) {
    return a < 0 ? ExtGcd{-a, -1, 0} : ExtGcd{a, 1, 0};
  }
  ExtGcd sub = ext_gcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

}  // namespace

WitnessGroup witness_group(const WordSet& v) {
  if (!v.non_trivial()) throw Error("word set must be non-trivial");

  // Integers branch: gcd of all exponent sums, with an explicit combination
  // of word values adding up to it.
  long long total_gcd = 0;
  std::vector<WitnessTerm> terms;
  for (const Word& w : v.words()) {
    std::vector<long long> sums = exponent_sums(w);
    if (std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; })) continue;

    // Per-word: coefficients c with sum(s_i * c_i) = gcd of the sums.
    std::vector<long long> coeffs(sums.size(), 0);
    long long word_gcd = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (sums[i] == 0) continue;
      if (word_gcd == 0) {
        word_gcd = std::abs(sums[i]);
        coeffs[i] = sums[i] > 0 ? 1 : -1;
      } else {
        ExtGcd e = ext_gcd(word_gcd, sums[i]);
        for (long long& c : coeffs) c *= e.x;
        coeffs[i] = e.y;
        word_gcd = e.g;
      }
    }

    if (total_gcd == 0) {
      total_gcd = word_gcd;
      std::vector<LazyGroup::Element> assignment;
      for (long long c : coeffs) assignment.emplace_back(c);
      terms.push_back({w, std::move(assignment), false});
    } else {
      ExtGcd e = ext_gcd(total_gcd, word_gcd);
      if (e.g < total_gcd) {
        for (WitnessTerm& term : terms) {
          for (LazyGroup::Element& el : term.assignment) {
            el = std::get<long long>(el) * e.x;
          }
        }
        std::vector<LazyGroup::Element> assignment;
        for (long long c : coeffs) assignment.emplace_back(c * e.y);
        terms.push_back({w, std::move(assignment), false});
        total_gcd = e.g;
      }
    }
  }
  if (total_gcd != 0) {
    WitnessGroup out{LazyGroup::integers(total_gcd), std::move(terms),
                     "integers with a = " + std::to_string(total_gcd)};
    if (!verify_certificate(out)) throw Error("integer witness certificate failed");
    return out;
  }

  // Heisenberg branch: all exponent sums vanish, so every value is central;
  // search a generator ball for a nontrivial one.
  LazyGroup h3 = LazyGroup::heisenberg(1);
  std::vector<HeisenbergElement> ball;
  for (long long a = -1; a <= 1; ++a) {
    for (long long b = -1; b <= 1; ++b) {
      for (long long c = -1; c <= 1; ++c) ball.push_back({a, b, c});
    }
  }
  constexpr std::size_t kEvalCap = 1'000'000;
  std::size_t evals = 0;
  for (const Word& w : v.words()) {
    const int arity = w.arity();
    if (arity == 0) continue;
    std::size_t tuples = 1;
    for (int i = 0; i < arity; ++i) {
      if (tuples > kEvalCap / ball.size()) { tuples = kEvalCap + 1; break; }
      tuples *= ball.size();
    }
    if (tuples > kEvalCap) tuples = kEvalCap;
    LazyOps ops{&h3};
    std::vector<LazyGroup::Element> assignment(static_cast<std::size_t>(arity));
    for (std::size_t tup = 0; tup < tuples && evals < kEvalCap; ++tup, ++evals) {
      std::size_t rest = tup;
      for (int i = arity - 1; i >= 0; --i) {
        assignment[static_cast<std::size_t>(i)] = ball[rest % ball.size()];
        rest /= ball.size();
      }
      LazyGroup::Element value = evaluate_word(
          w, std::span<const LazyGroup::Element>(assignment.data(), assignment.size()),
          ops);
      const auto& e = std::get<HeisenbergElement>(value);
      if (e.a == 0 && e.b == 0 && e.c != 0) {
        bool inverted = e.c < 0;
        long long t = std::abs(e.c);
        WitnessGroup out{LazyGroup::heisenberg(t),
                         {WitnessTerm{w, assignment, inverted}},
                         "heisenberg with a = (0,0," + std::to_string(t) + ")"};
        if (!verify_certificate(out)) throw Error("heisenberg witness certificate failed");
        return out;
      }
    }
  }

  throw Unsupported(
      "word set " + v.str() +
      " vanishes on the class-2 witnesses; a free nilpotent group of class > 2 "
      "would be required, which this engine does not represent");
}

bool verify_certificate(const WitnessGroup& w) {
  LazyOps ops{&w.group};
  LazyGroup::Element product = w.group.identity();
  for (const WitnessTerm& term : w.certificate) {
    LazyGroup::Element value = evaluate_word(
        term.word,
        std::span<const LazyGroup::Element>(term.assignment.data(), term.assignment.size()),
        ops);
    if (term.inverted) value = w.group.inverse(value);
    product = w.group.multiply(product, value);
  }
  return w.group.equal(product, w.group.distinguished());
}

std::function<long long(long long)> right_translation_index_map(
    const LazyGroup& l, const LazyGroup::Element& g) {
  return [l, g](long long i) { return l.index_of(l.multiply(l.element_at(i), g)); };
}

}  // namespace vembed
