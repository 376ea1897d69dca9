#pragma once

#include <string>
#include <vector>

#include "vembed/permutation.hpp"

namespace vembed {

/// An eventually-constant function from Z to a finite permutation group:
/// value values()[0] on (-inf, jumps()[0]], values()[j] on
/// (jumps()[j-1], jumps()[j]], and values().back() on (jumps().back(), inf).
/// Canonical form merges equal adjacent values, so the jump count is
/// well-defined and structural equality is function equality.
class StepFn {
public:
  StepFn() = default;  // constant on the degree-0 carrier; use constant()
  static StepFn constant(Permutation value);
  StepFn(std::vector<long long> jumps, std::vector<Permutation> values);

  const Permutation& eval(long long i) const;
  std::size_t jump_count() const { return jumps_.size(); }
  const std::vector<long long>& jumps() const { return jumps_; }
  const std::vector<Permutation>& values() const { return values_; }

  const Permutation& left_value() const { return values_.front(); }
  const Permutation& right_value() const { return values_.back(); }

  StepFn pointwise_multiply(const StepFn& rhs) const;
  StepFn pointwise_inverse() const;
  StepFn shifted(long long k) const;  // jump indices move by +k

  bool is_constant() const { return jumps_.empty(); }
  bool is_constant_identity() const;

  bool operator==(const StepFn&) const = default;

  std::string str() const;

private:
  void canonicalize();
  std::vector<long long> jumps_;
  std::vector<Permutation> values_{Permutation()};
};

}  // namespace vembed
