#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "vembed/word.hpp"

namespace vembed {

/// Mal'cev coordinates of an upper unitriangular 3x3 integer matrix:
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct HeisenbergElement {
  long long a = 0, b = 0, c = 0;
  bool operator==(const HeisenbergElement&) const = default;
};

HeisenbergElement h3_multiply(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement h3_inverse(const HeisenbergElement& x);

/// A computably represented countable group (the integers, or the discrete
/// Heisenberg group) together with a distinguished element `a` of infinite
/// order and the index enumeration: element_at(i) = a^i for all i <= 0, and
/// positive indices enumerate the complement of that tail in expanding-shell
/// order with lexicographic tie-breaking. index_of inverts element_at by
/// shell arithmetic.
class LazyGroup {
public:
  enum class Kind { integers, heisenberg };
  using Element = std::variant<long long, HeisenbergElement>;

  static LazyGroup integers(long long unit = 1);      // a = unit (> 0)
  static LazyGroup heisenberg(long long central = 1); // a = (0,0,central), central > 0

  Kind kind() const { return kind_; }
  /// d for the integers (a = d), t for Heisenberg (a = (0,0,t)).
  long long parameter() const { return param_; }
  /// True when element_at is the identity map on indices (integers, a = 1).
  bool identity_indexed() const { return kind_ == Kind::integers && param_ == 1; }

  Element identity() const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  bool equal(const Element& x, const Element& y) const;
  bool is_identity(const Element& x) const;

  Element distinguished() const;                       // a
  Element distinguished_power(long long i) const;      // a^i, closed form

  Element element_at(long long index) const;           // alpha
  long long index_of(const Element& x) const;          // alpha^{-1}

  std::string show(const Element& x) const;

private:
  LazyGroup(Kind kind, long long param);
  Kind kind_;
  long long param_;
};

/// evaluate_word adapter.
struct LazyOps {
  using Element = LazyGroup::Element;
  const LazyGroup* group;
  Element identity() const { return group->identity(); }
  Element multiply(const Element& a, const Element& b) const {
    return group->multiply(a, b);
  }
  Element inverse(const Element& a) const { return group->inverse(a); }
};

/// One factor of the constructive membership certificate for a in V(L):
/// the value of `word` at `assignment`, inverted when `inverted` is set.
struct WitnessTerm {
  Word word;
  std::vector<LazyGroup::Element> assignment;
  bool inverted = false;
};

struct WitnessGroup {
  LazyGroup group;
  std::vector<WitnessTerm> certificate;  // product of term values equals a
  std::string description;
};

/// Selects a nilpotent witness whose verbal subgroup contains an element of
/// infinite order: the integers when some word has a nonzero exponent sum,
/// else the Heisenberg group when the words take a nontrivial central value
/// on a bounded generator ball. Throws Unsupported otherwise (a witness of
/// nilpotency class > 2 would be required).
WitnessGroup witness_group(const WordSet& v);

/// Recomputes the certificate product and compares it with a.
bool verify_certificate(const WitnessGroup& w);

/// i -> index_of(element_at(i) * g).
std::function<long long(long long)> right_translation_index_map(const LazyGroup& l,
                                                                const LazyGroup::Element& g);

}  // namespace vembed
