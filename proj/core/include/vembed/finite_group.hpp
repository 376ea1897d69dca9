#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vembed/permutation.hpp"
#include "vembed/word.hpp"

namespace vembed {

struct GroupOptions {
  std::size_t order_cap = 20000;
};

/// A fully materialized finite permutation group. Elements are closed under
/// composition at construction time and stored in canonical order
/// (lexicographic on image sequences, so the identity is element 0).
/// Immutable after construction; copies share the element table.
class FiniteGroup {
public:
  FiniteGroup(int degree, std::vector<Permutation> generators,
              GroupOptions opts = {}, std::string name = "");

  static FiniteGroup trivial(int degree = 1);

  int degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& generators() const;
  const Permutation& identity() const;
  const Permutation& element(std::size_t index) const;

  /// Canonical index of an element, or -1 if not a member.
  long index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;
  bool contains_all(const FiniteGroup& other) const;
  bool same_group(const FiniteGroup& other) const;
  bool is_subgroup_of(const FiniteGroup& other) const;

  /// BFS factorization of an element over the generators:
  /// element(i) = element(parent(i)) * generators()[gen(i)] for i > 0.
  struct Definition {
    std::size_t parent;
    std::size_t generator;
  };
  const std::vector<Definition>& definitions() const;

  const std::string& name() const;
  FiniteGroup renamed(std::string name) const;

  std::string describe() const;  // name or generator list

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Group operations adapter for evaluate_word over permutations.
struct PermOps {
  using Element = Permutation;
  int deg;
  Element identity() const { return Permutation(deg); }
  Element multiply(const Element& a, const Element& b) const { return a.compose(b); }
  Element inverse(const Element& a) const { return a.inverse(); }
};

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           GroupOptions opts = {});

/// A verified homomorphism between materialized groups, defined by images
/// of the source generators. Construction checks multiplicativity on all
/// source pairs.
class GroupHomomorphism {
public:
  GroupHomomorphism(FiniteGroup source, FiniteGroup target,
                    std::vector<Permutation> generator_images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<Permutation>& generator_images() const { return generator_images_; }

  const Permutation& apply(const Permutation& source_element) const;
  std::vector<Permutation> image_elements() const;  // deduplicated, sorted
  FiniteGroup image(GroupOptions opts = {}) const;
  bool is_injective() const;

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Permutation> generator_images_;
  std::vector<Permutation> element_images_;  // indexed like source_.elements()
};

}  // namespace vembed
