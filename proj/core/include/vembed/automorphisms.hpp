#pragma once

#include <optional>

#include "vembed/finite_group.hpp"
#include "vembed/group_analysis.hpp"

namespace vembed {

struct AutOptions {
  std::size_t group_order_cap = 256;
  std::size_t candidate_cap = 50'000'000;
};

/// Aut(g) as a permutation group acting on g's canonical element list.
/// Found by mapping a reduced generating sequence onto order-compatible
/// image tuples and keeping those that define automorphisms.
struct AutomorphismGroupResult {
  FiniteGroup group;                         // degree = |g|
  std::vector<std::size_t> base_generators;  // element indices of the probed sequence
};

AutomorphismGroupResult automorphism_group(const FiniteGroup& g, AutOptions opts = {});

/// The permutation of g's element list induced by conjugation with `by`.
Permutation conjugation_permutation(const FiniteGroup& g, const Permutation& by);

/// Image of the conjugation map, as a subgroup of Aut(g)'s carrier.
FiniteGroup inner_automorphism_group(const FiniteGroup& g);

struct CriterionResult {
  bool contained;       // V(Aut h) contains Inn h
  bool exact;           // verbal computation was exhaustive
  std::size_t aut_order;
  std::size_t inner_order;
  std::size_t verbal_order;
  // Set when contained is false: an inner automorphism outside V(Aut h)
  // and a group element inducing it.
  std::optional<Permutation> witness_inner;
  std::optional<Permutation> witness_conjugator;
};

/// The normal-embeddability containment V(Aut h) >= Inn h, evaluated
/// directly on the automorphism group.
CriterionResult normal_embedding_criterion(const FiniteGroup& h, const WordSet& v,
                                           AutOptions aut_opts = {},
                                           ScanOptions scan_opts = {});

/// Trivial center and |Aut| = |g| (every automorphism inner).
bool is_complete(const FiniteGroup& g, AutOptions opts = {});

}  // namespace vembed
