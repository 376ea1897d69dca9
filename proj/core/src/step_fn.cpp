#include "vembed/step_fn.hpp"

#include <algorithm>

#include "vembed/error.hpp"

namespace vembed {

StepFn StepFn::constant(Permutation value) {
  StepFn f;
  f.values_ = {std::move(value)};
  return f;
}

StepFn::StepFn(std::vector<long long> jumps, std::vector<Permutation> values)
    : jumps_(std::move(jumps)), values_(std::move(values)) {
  if (values_.size() != jumps_.size() + 1) {
    throw Error("step function needs one more value than jumps");
  }
  if (!std::is_sorted(jumps_.begin(), jumps_.end()) ||
      std::adjacent_find(jumps_.begin(), jumps_.end()) != jumps_.end()) {
    throw Error("jump indices must be strictly increasing");
  }
  canonicalize();
}

void StepFn::canonicalize() {
  std::size_t keep = 0;
  for (std::size_t j = 0; j < jumps_.size(); ++j) {
    if (values_[keep] == values_[j + 1]) continue;  // removable jump
    jumps_[keep] = jumps_[j];
    values_[keep + 1] = values_[j + 1];
    ++keep;
  }
  jumps_.resize(keep);
  values_.resize(keep + 1);
}

const Permutation& StepFn::eval(long long i) const {
  std::size_t pos = static_cast<std::size_t>(
      std::lower_bound(jumps_.begin(), jumps_.end(), i) - jumps_.begin());
  return values_[pos];
}

StepFn StepFn::pointwise_multiply(const StepFn& rhs) const {
  std::vector<long long> merged;
  merged.reserve(jumps_.size() + rhs.jumps_.size());
  std::merge(jumps_.begin(), jumps_.end(), rhs.jumps_.begin(), rhs.jumps_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<Permutation> values;
  values.reserve(merged.size() + 1);
  // The value on an interval can be sampled at its right endpoint; the open
  // tail is sampled one past the last jump.
  for (std::size_t j = 0; j < merged.size(); ++j) {
    values.push_back(eval(merged[j]).compose(rhs.eval(merged[j])));
  }
  long long tail_point = merged.empty() ? 0 : merged.back() + 1;
  values.push_back(eval(tail_point).compose(rhs.eval(tail_point)));
  return StepFn(std::move(merged), std::move(values));
}

StepFn StepFn::pointwise_inverse() const {
  StepFn f = *this;
  for (Permutation& v : f.values_) v = v.inverse();
  return f;
}

StepFn StepFn::shifted(long long k) const {
  StepFn f = *this;
  for (long long& j : f.jumps_) j += k;
  return f;
}

bool StepFn::is_constant_identity() const {
  return jumps_.empty() && values_.front().is_identity();
}

std::string StepFn::str() const {
  std::string out = "step[";
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (j) out += " |" + std::to_string(jumps_[j - 1]) + "| ";
    out += values_[j].cycle_string();
  }
  out += "]";
  return out;
}

}  // namespace vembed
