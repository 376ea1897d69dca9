#pragma once

#include <string>
#include <vector>

#include "vembed/finite_group.hpp"

namespace vembed {
namespace catalog {

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
FiniteGroup quaternion8();
FiniteGroup elementary_abelian(int p, int k);
/// Upper unitriangular 3x3 matrices over Z_{p^k}, regular representation.
FiniteGroup heisenberg_mod(int p, int k);
/// Order p^3 for odd p: type 1 has exponent p, type 2 exponent p^2.
/// For p = 2: type 1 is dihedral(4), type 2 is quaternion8.
FiniteGroup extraspecial(int p, int type);

/// Builds from catalog text, e.g. "cyclic 6", "heisenberg_mod 2 1",
/// "direct_product(cyclic 2, symmetric 3)".
FiniteGroup build(const std::string& text);

/// Group spec format: "catalog:<name>" or
/// "perm degree=<n>; gens = (0 1)(2 3), (0 1 2 3)".
FiniteGroup parse_group_spec(const std::string& text);

struct Entry {
  std::string name;
  std::size_t order;
};

/// The deterministic scan list used by the example generator and the
/// classifier, sorted by (order, name tokens with numeric parameters).
std::vector<Entry> standard_entries(std::size_t max_order);

/// Witness candidates for embedding p-groups of exponent p^k: the order-p^3k
/// Heisenberg family, extraspecial groups, the order-8 groups for p = 2, and
/// direct powers, sorted by (order, name).
std::vector<Entry> p_group_candidates(int p, int k, std::size_t max_order);

}  // namespace catalog
}  // namespace vembed
