#include "vembed/group_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_set>

#include "vembed/error.hpp"

namespace vembed {

namespace {

using PermSet = std::unordered_set<Permutation, PermHash>;

std::vector<Permutation> close_under_product(std::vector<Permutation> gens, int degree) {
  FiniteGroup g(degree, std::move(gens), GroupOptions{.order_cap = 1u << 22});
  return g.elements();
}

}  // namespace

FiniteGroup normal_closure(std::span<const Permutation> seed, const FiniteGroup& g) {
  std::vector<Permutation> gens;
  for (const Permutation& p : seed) {
    if (!g.contains(p)) throw Error("normal closure seed lies outside the group");
    if (!p.is_identity()) gens.push_back(p);
  }
  for (;;) {
    FiniteGroup current(g.degree(), gens, GroupOptions{.order_cap = g.order() + 1});
    std::vector<Permutation> fresh;
    for (const Permutation& x : current.elements()) {
      for (const Permutation& c : g.generators()) {
        Permutation conj = x.conjugate(c);
        if (!current.contains(conj)) fresh.push_back(conj);
      }
    }
    if (fresh.empty()) return current;
    gens = current.elements();
    gens.insert(gens.end(), fresh.begin(), fresh.end());
  }
}

std::optional<int> subnormal_defect(const FiniteGroup& h, const FiniteGroup& g) {
  if (!h.is_subgroup_of(g)) throw Error("subnormal defect requires a subgroup");
  FiniteGroup current = g;
  int defect = 0;
  for (;;) {
    if (current.same_group(h)) return defect;
    FiniteGroup next = normal_closure(h.elements(), current);
    if (next.same_group(current)) return std::nullopt;
    current = std::move(next);
    ++defect;
  }
}

namespace {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("VERBAL_EMBED_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= 64) return v;
  }
  return 1;
}

/// All values of `w` on tuples of g-elements whose odometer index lies in
/// [begin, end). Tuple digit i (0 = slowest) selects the assignment for
/// variable x_{i+1}.
std::vector<Permutation> scan_word_range(const FiniteGroup& g, const Word& w,
                                         std::size_t begin, std::size_t end) {
  const int arity = w.arity();
  const std::size_t n = g.order();
  PermOps ops{g.degree()};
  std::vector<Permutation> assignment(static_cast<std::size_t>(arity),
                                      Permutation(g.degree()));
  PermSet local;
  std::vector<Permutation> out;
  for (std::size_t t = begin; t < end; ++t) {
    std::size_t rest = t;
    for (int v = arity - 1; v >= 0; --v) {
      assignment[static_cast<std::size_t>(v)] = g.element(rest % n);
      rest /= n;
    }
    Permutation value = evaluate_word(
        w, std::span<const Permutation>(assignment.data(), assignment.size()), ops);
    if (local.insert(value).second) out.push_back(std::move(value));
  }
  return out;
}

}  // namespace

VerbalResult verbal_subgroup(const FiniteGroup& g, const WordSet& v, ScanOptions opts) {
  PermSet values;
  std::vector<Permutation> gens;
  auto add_value = [&](const Permutation& p) {
    if (!p.is_identity() && values.insert(p).second) gens.push_back(p);
  };

  bool exact = true;
  std::size_t scanned = 0;
  const int workers = resolve_workers(opts.workers);

  for (const Word& w : v.words()) {
    if (w.is_empty()) continue;
    const int arity = w.arity();
    // Tuple count n^arity, saturating at the budget boundary.
    std::size_t tuples = 1;
    bool over = false;
    for (int i = 0; i < arity; ++i) {
      if (tuples > opts.tuple_budget / g.order() + 1) { over = true; break; }
      tuples *= g.order();
    }
    if (!over && tuples <= opts.tuple_budget) {
      scanned += tuples;
      if (workers <= 1 || tuples < 4096) {
        for (const Permutation& p : scan_word_range(g, w, 0, tuples)) add_value(p);
      } else {
        std::vector<std::vector<Permutation>> parts(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        std::size_t chunk = tuples / static_cast<std::size_t>(workers) + 1;
        for (int t = 0; t < workers; ++t) {
          std::size_t begin = std::min(tuples, chunk * static_cast<std::size_t>(t));
          std::size_t end = std::min(tuples, begin + chunk);
          threads.emplace_back([&, t, begin, end] {
            parts[static_cast<std::size_t>(t)] = scan_word_range(g, w, begin, end);
          });
        }
        for (auto& th : threads) th.join();
        for (const auto& part : parts) {
          for (const Permutation& p : part) add_value(p);
        }
      }
    } else {
      exact = false;
      std::mt19937_64 rng(opts.seed);
      PermOps ops{g.degree()};
      std::vector<Permutation> assignment(static_cast<std::size_t>(arity),
                                          Permutation(g.degree()));
      for (std::size_t s = 0; s < opts.sample_count; ++s) {
        for (int i = 0; i < arity; ++i) {
          assignment[static_cast<std::size_t>(i)] =
              g.element(static_cast<std::size_t>(rng() % g.order()));
        }
        add_value(evaluate_word(
            w, std::span<const Permutation>(assignment.data(), assignment.size()), ops));
      }
      scanned += opts.sample_count;
    }
  }

  FiniteGroup sub(g.degree(), std::move(gens), GroupOptions{.order_cap = g.order() + 1});
  return VerbalResult{std::move(sub), exact, scanned};
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  // Normal closure of generator commutators.
  std::vector<Permutation> seeds;
  for (const Permutation& a : g.generators()) {
    for (const Permutation& b : g.generators()) {
      Permutation c = a.inverse().compose(b.inverse()).compose(a).compose(b);
      if (!c.is_identity()) seeds.push_back(c);
    }
  }
  return normal_closure(seeds, g);
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<Permutation> members;
  for (const Permutation& x : g.elements()) {
    bool central = true;
    for (const Permutation& c : g.generators()) {
      if (x.compose(c) != c.compose(x)) { central = false; break; }
    }
    if (central && !x.is_identity()) members.push_back(x);
  }
  return FiniteGroup(g.degree(), std::move(members),
                     GroupOptions{.order_cap = g.order() + 1});
}

long long exponent(const FiniteGroup& g) {
  long long e = 1;
  for (const Permutation& x : g.elements()) e = std::lcm(e, x.order());
  return e;
}

FiniteGroup commutator_with_group(const FiniteGroup& a_sub, const FiniteGroup& g) {
  std::vector<Permutation> seeds;
  PermSet seen;
  for (const Permutation& a : a_sub.elements()) {
    for (const Permutation& c : g.generators()) {
      Permutation comm = a.inverse().compose(c.inverse()).compose(a).compose(c);
      if (!comm.is_identity() && seen.insert(comm).second) seeds.push_back(comm);
    }
  }
  return normal_closure(seeds, g);
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  FiniteGroup term = g;
  int cls = 0;
  for (;;) {
    if (term.order() == 1) return cls;
    FiniteGroup next = commutator_with_group(term, g);
    if (next.same_group(term)) return std::nullopt;
    term = std::move(next);
    ++cls;
  }
}

bool is_solvable(const FiniteGroup& g) {
  FiniteGroup term = g;
  for (;;) {
    if (term.order() == 1) return true;
    FiniteGroup next = derived_subgroup(term);
    if (next.same_group(term)) return false;
    term = std::move(next);
  }
}

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

FiniteGroup sylow_subgroup(const FiniteGroup& g, int p) {
  std::vector<Permutation> members;
  for (const Permutation& x : g.elements()) {
    long long o = x.order();
    while (o % p == 0) o /= p;
    if (o == 1 && !x.is_identity()) members.push_back(x);
  }
  FiniteGroup s(g.degree(), members, GroupOptions{.order_cap = g.order() + 1});
  if (s.order() != members.size() + 1) {
    throw Error("p-elements do not form a subgroup (group is not nilpotent)");
  }
  return s;
}

std::vector<Permutation> reduced_generators(const FiniteGroup& g) {
  std::vector<Permutation> gens;
  if (g.order() == 1) return gens;
  std::size_t covered = 1;
  while (covered < g.order()) {
    FiniteGroup current(g.degree(), gens, GroupOptions{.order_cap = g.order() + 1});
    covered = current.order();
    if (covered == g.order()) break;
    for (const Permutation& x : g.elements()) {
      if (!current.contains(x)) {
        gens.push_back(x);
        break;
      }
    }
  }
  return gens;
}

ProductVarietyResult in_product_variety(const FiniteGroup& g, const WordSet& w_laws,
                                        const WordSet& v, ScanOptions opts) {
  VerbalResult inner = verbal_subgroup(g, v, opts);
  VerbalResult outer = verbal_subgroup(inner.subgroup, w_laws, opts);
  return ProductVarietyResult{outer.subgroup.order() == 1, inner.exact && outer.exact};
}

}  // namespace vembed
