#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vembed {

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
/// Composition is left-to-right: (p * q)(x) = q(p(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation from_images(std::vector<int> images);
  /// Parses cycle notation, e.g. "(0 1)(2 3)" or "()" for the identity.
  static Permutation from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& then) const;
  Permutation inverse() const;
  Permutation conjugate(const Permutation& by) const;  // by^-1 * this * by
  Permutation power(long long k) const;
  long long order() const;
  bool is_identity() const;

  /// Same mapping on a larger point set (new points fixed).
  Permutation extended(int new_degree) const;
  /// Mapping moved up by `offset` inside a point set of size `new_degree`.
  Permutation shifted(int offset, int new_degree) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lexicographic

  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return a.compose(b);
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace vembed
