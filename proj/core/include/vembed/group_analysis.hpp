#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "vembed/finite_group.hpp"
#include "vembed/word.hpp"

namespace vembed {

/// Smallest normal subgroup of `g` containing `seed`.
FiniteGroup normal_closure(std::span<const Permutation> seed, const FiniteGroup& g);

/// Length of the shortest chain h = H_k <| ... <| H_0 = g obtained by
/// iterating normal closures, or nullopt when the chain stabilizes above h.
std::optional<int> subnormal_defect(const FiniteGroup& h, const FiniteGroup& g);

struct ScanOptions {
  std::size_t tuple_budget = 10'000'000;
  std::size_t sample_count = 100'000;
  std::uint64_t seed = 0x5eedba5e5eedba5eull;
  int workers = 0;  // 0: use VERBAL_EMBED_WORKERS env var, else 1
};

struct VerbalResult {
  FiniteGroup subgroup;
  bool exact;  // false: sampling mode, subgroup is a verified lower bound
  std::size_t tuples_scanned = 0;
};

/// Subgroup generated by all values of the words of `v` on `g`. Exhaustive
/// while the tuple count fits the budget, otherwise a seeded sampling pass
/// whose result is flagged as a lower bound.
VerbalResult verbal_subgroup(const FiniteGroup& g, const WordSet& v, ScanOptions opts = {});

FiniteGroup derived_subgroup(const FiniteGroup& g);
FiniteGroup center(const FiniteGroup& g);
long long exponent(const FiniteGroup& g);
std::optional<int> nilpotency_class(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// [a_sub, g]: generated by commutators of a_sub elements with g generators,
/// normally closed in g.
FiniteGroup commutator_with_group(const FiniteGroup& a_sub, const FiniteGroup& g);

std::vector<int> prime_divisors(std::size_t n);

/// Elements of p-power order. A subgroup exactly when g is nilpotent; the
/// result is verified to be closed and an error is raised otherwise.
FiniteGroup sylow_subgroup(const FiniteGroup& g, int p);

/// Small deterministic generating sequence (greedy over canonical order).
std::vector<Permutation> reduced_generators(const FiniteGroup& g);

struct ProductVarietyResult {
  bool value;
  bool exact;
};

/// Whether w evaluates trivially on the v-verbal subgroup of g.
ProductVarietyResult in_product_variety(const FiniteGroup& g, const WordSet& w_laws,
                                        const WordSet& v, ScanOptions opts = {});

}  // namespace vembed
