#pragma once

#include <optional>
#include <span>
#include <string>

#include "vembed/finite_group.hpp"
#include "vembed/group_analysis.hpp"

namespace vembed {

/// Regular wreath product bottom Wr top on the imprimitive action over
/// (bottom points) x (top elements). Block t of the point set carries the
/// t-th coordinate copy of the bottom group; the top copy permutes blocks by
/// right translation on the top element list.
class WreathProduct {
public:
  WreathProduct(FiniteGroup bottom, FiniteGroup top);

  const FiniteGroup& bottom() const { return bottom_; }
  const FiniteGroup& top() const { return top_; }
  int degree() const { return degree_; }

  /// |bottom|^|top| * |top| if it fits in 64 bits.
  std::optional<std::size_t> full_order() const;
  std::string full_order_string() const;  // formula text, always available

  Permutation top_element(const Permutation& p) const;
  Permutation coordinate(std::size_t block, const Permutation& h) const;
  /// Base element with one bottom value per block.
  Permutation base_element(std::span<const Permutation> values) const;
  Permutation diagonal(const Permutation& h) const;

  const std::vector<Permutation>& generators() const { return generators_; }

  /// Splits a wreath element into its block permutation and per-block bottom
  /// values; errors when the permutation does not respect the blocks.
  struct Decomposition {
    Permutation block_permutation;       // degree = |top|
    std::vector<Permutation> base_values;  // one per block
  };
  Decomposition decompose(const Permutation& w) const;

  FiniteGroup materialize(GroupOptions opts = {}) const;

  FiniteGroup diagonal_subgroup(GroupOptions opts = {}) const;
  FiniteGroup first_copy_subgroup(GroupOptions opts = {}) const;

  GroupHomomorphism diagonal_embedding(const FiniteGroup& product) const;
  GroupHomomorphism first_copy_embedding(const FiniteGroup& product) const;

private:
  FiniteGroup bottom_;
  FiniteGroup top_;
  int degree_;
  std::vector<Permutation> generators_;
};

struct VerbalSubnormalReport {
  bool contained;
  bool containment_exact;  // false: verbal side was sampling mode
  std::optional<int> defect;
};

/// The acceptance predicate for an embedding: image inside V(g) and
/// subnormal in g.
VerbalSubnormalReport verify_verbal_subnormal(const FiniteGroup& image,
                                              const FiniteGroup& g, const WordSet& v,
                                              ScanOptions opts = {});

struct Prop5Options {
  std::size_t verify_budget = 20000;   // max |W| for full endpoint verification
  std::size_t candidate_max_order = 1u << 20;
  ScanOptions scan;
};

struct Prop5Branch {
  enum class Outcome {
    verified,         // endpoint checks ran and passed
    skipped_budget,   // candidate selected, wreath too large to enumerate
    exhausted,        // no candidate passed
  };
  int prime = 0;
  std::size_t sylow_order = 0;
  std::string witness_name;
  std::size_t witness_order = 0;
  long long witness_verbal_exponent = 0;  // exp(V(P)) of the selected witness
  std::string wreath_order;               // formula text
  Outcome outcome = Outcome::exhausted;
  std::optional<int> diagonal_defect;
  bool containment = false;
  std::vector<std::string> rejected;  // per-candidate failure notes
};

struct Prop5Result {
  std::vector<Prop5Branch> branches;
  bool composed = false;  // more than one prime, composed by direct product
  bool all_verified() const;
  bool any_failed() const;
};

/// For nilpotent h, finds per-Sylow witness groups P (catalog search with a
/// centrality precheck) and verifies Diag(S_p Wr P) inside V(W) and subnormal
/// in W by direct enumeration when the wreath fits the budget.
Prop5Result prop5_construct(const FiniteGroup& h, const WordSet& v, Prop5Options opts = {});

}  // namespace vembed
