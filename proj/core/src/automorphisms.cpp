#include "vembed/automorphisms.hpp"

#include <algorithm>

#include "vembed/error.hpp"

namespace vembed {

namespace {

/// Extends generator-image candidates to a full map over element indices,
/// or returns an empty vector when the candidate is not a homomorphism.
std::vector<int> try_extend(const FiniteGroup& g,
                            const std::vector<std::size_t>& base_indices,
                            const std::vector<std::size_t>& image_indices) {
  const std::size_t n = g.order();
  // Index-level multiplication through the permutation representation.
  auto mul = [&](std::size_t a, std::size_t b) -> long {
    return g.index_of(g.element(a).compose(g.element(b)));
  };

  // BFS over words in the base sequence; fails fast on inconsistency.
  std::vector<long> image(n, -1);
  image[0] = 0;
  std::vector<std::size_t> frontier{0};
  std::size_t assigned = 1;
  while (!frontier.empty()) {
    std::vector<std::size_t> next_frontier;
    for (std::size_t cur : frontier) {
      for (std::size_t k = 0; k < base_indices.size(); ++k) {
        long to = mul(cur, base_indices[k]);
        long img = mul(static_cast<std::size_t>(image[cur]), image_indices[k]);
        if (image[static_cast<std::size_t>(to)] == -1) {
          image[static_cast<std::size_t>(to)] = img;
          next_frontier.push_back(static_cast<std::size_t>(to));
          ++assigned;
        } else if (image[static_cast<std::size_t>(to)] != img) {
          return {};
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  if (assigned != n) return {};  // base sequence does not generate

  // Bijectivity.
  std::vector<bool> hit(n, false);
  for (long v : image) {
    if (hit[static_cast<std::size_t>(v)]) return {};
    hit[static_cast<std::size_t>(v)] = true;
  }
  // Full multiplication-table consistency.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long ab = mul(a, b);
      long im = mul(static_cast<std::size_t>(image[a]), static_cast<std::size_t>(image[b]));
      if (image[static_cast<std::size_t>(ab)] != im) return {};
    }
  }
  return std::vector<int>(image.begin(), image.end());
}

}  // namespace

AutomorphismGroupResult automorphism_group(const FiniteGroup& g, AutOptions opts) {
  const std::size_t n = g.order();
  if (n > opts.group_order_cap) {
    throw CapExceeded("automorphism search cap exceeded for order " + std::to_string(n), n);
  }

  std::vector<Permutation> base = reduced_generators(g);
  std::vector<std::size_t> base_indices;
  for (const Permutation& p : base) {
    base_indices.push_back(static_cast<std::size_t>(g.index_of(p)));
  }

  if (base_indices.empty()) {
    // Trivial group.
    return AutomorphismGroupResult{FiniteGroup::trivial(std::max<int>(1, static_cast<int>(n))),
                                   {}};
  }

  // Candidate images must match element orders.
  std::vector<std::vector<std::size_t>> pools(base_indices.size());
  for (std::size_t k = 0; k < base_indices.size(); ++k) {
    long long o = g.element(base_indices[k]).order();
    for (std::size_t i = 0; i < n; ++i) {
      if (g.element(i).order() == o) pools[k].push_back(i);
    }
  }

  std::size_t total = 1;
  for (const auto& pool : pools) {
    if (total > opts.candidate_cap / std::max<std::size_t>(pool.size(), 1)) {
      throw CapExceeded("automorphism candidate space too large", total);
    }
    total *= pool.size();
  }

  std::vector<Permutation> automorphisms;
  std::vector<std::size_t> image_indices(base_indices.size());
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t k = pools.size(); k-- > 0;) {
      image_indices[k] = pools[k][rest % pools[k].size()];
      rest /= pools[k].size();
    }
    std::vector<int> images = try_extend(g, base_indices, image_indices);
    if (!images.empty()) {
      automorphisms.push_back(Permutation::from_images(std::move(images)));
    }
  }

  FiniteGroup aut(static_cast<int>(n), automorphisms,
                  GroupOptions{.order_cap = std::max<std::size_t>(automorphisms.size() * 2,
                                                                  1u << 20)},
                  "Aut(" + g.describe() + ")");
  if (aut.order() != automorphisms.size()) {
    throw Error("automorphism set not closed (search bug)");
  }
  return AutomorphismGroupResult{std::move(aut), std::move(base_indices)};
}

Permutation conjugation_permutation(const FiniteGroup& g, const Permutation& by) {
  std::vector<int> images(g.order());
  Permutation inv = by.inverse();
  for (std::size_t i = 0; i < g.order(); ++i) {
    Permutation conj = inv.compose(g.element(i)).compose(by);
    images[i] = static_cast<int>(g.index_of(conj));
  }
  return Permutation::from_images(std::move(images));
}

FiniteGroup inner_automorphism_group(const FiniteGroup& g) {
  std::vector<Permutation> gens;
  for (const Permutation& c : g.generators()) {
    gens.push_back(conjugation_permutation(g, c));
  }
  return FiniteGroup(static_cast<int>(g.order()), std::move(gens),
                     GroupOptions{.order_cap = g.order() + 1},
                     "Inn(" + g.describe() + ")");
}

CriterionResult normal_embedding_criterion(const FiniteGroup& h, const WordSet& v,
                                           AutOptions aut_opts, ScanOptions scan_opts) {
  AutomorphismGroupResult aut = automorphism_group(h, aut_opts);
  FiniteGroup inner = inner_automorphism_group(h);
  VerbalResult verbal = verbal_subgroup(aut.group, v, scan_opts);

  CriterionResult result;
  result.aut_order = aut.group.order();
  result.inner_order = inner.order();
  result.verbal_order = verbal.subgroup.order();
  result.exact = verbal.exact;
  result.contained = true;
  for (const Permutation& x : h.elements()) {
    Permutation conj = conjugation_permutation(h, x);
    if (!verbal.subgroup.contains(conj)) {
      result.contained = false;
      result.witness_inner = conj;
      result.witness_conjugator = x;
      break;
    }
  }
  return result;
}

bool is_complete(const FiniteGroup& g, AutOptions opts) {
  if (center(g).order() != 1) return false;
  AutomorphismGroupResult aut = automorphism_group(g, opts);
  return aut.group.order() == g.order();
}

}  // namespace vembed
