#include "vembed/wreath.hpp"

#include <algorithm>

#include "vembed/catalog.hpp"
#include "vembed/error.hpp"

namespace vembed {

WreathProduct::WreathProduct(FiniteGroup bottom, FiniteGroup top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
  const std::size_t blocks = top_.order();
  degree_ = bottom_.degree() * static_cast<int>(blocks);
  for (const Permutation& p : top_.generators()) generators_.push_back(top_element(p));
  for (const Permutation& h : bottom_.generators()) generators_.push_back(coordinate(0, h));
}

std::optional<std::size_t> WreathProduct::full_order() const {
  std::size_t order = top_.order();
  for (std::size_t i = 0; i < top_.order(); ++i) {
    if (order > (std::size_t{1} << 62) / bottom_.order()) return std::nullopt;
    order *= bottom_.order();
  }
  return order;
}

std::string WreathProduct::full_order_string() const {
  return std::to_string(bottom_.order()) + "^" + std::to_string(top_.order()) + " * " +
         std::to_string(top_.order());
}

Permutation WreathProduct::top_element(const Permutation& p) const {
  const int d = bottom_.degree();
  std::vector<int> img(static_cast<std::size_t>(degree_));
  for (std::size_t t = 0; t < top_.order(); ++t) {
    // Right translation on the top element list permutes the blocks.
    std::size_t to = static_cast<std::size_t>(top_.index_of(top_.element(t).compose(p)));
    for (int i = 0; i < d; ++i) {
      img[t * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
          static_cast<int>(to) * d + i;
    }
  }
  return Permutation::from_images(std::move(img));
}

Permutation WreathProduct::coordinate(std::size_t block, const Permutation& h) const {
  const int d = bottom_.degree();
  std::vector<int> img(static_cast<std::size_t>(degree_));
  for (std::size_t t = 0; t < top_.order(); ++t) {
    for (int i = 0; i < d; ++i) {
      int within = (t == block) ? h.image(i) : i;
      img[t * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
          static_cast<int>(t) * d + within;
    }
  }
  return Permutation::from_images(std::move(img));
}

Permutation WreathProduct::base_element(std::span<const Permutation> values) const {
  if (values.size() != top_.order()) throw Error("one bottom value per block required");
  const int d = bottom_.degree();
  std::vector<int> img(static_cast<std::size_t>(degree_));
  for (std::size_t t = 0; t < top_.order(); ++t) {
    for (int i = 0; i < d; ++i) {
      img[t * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
          static_cast<int>(t) * d + values[t].image(i);
    }
  }
  return Permutation::from_images(std::move(img));
}

Permutation WreathProduct::diagonal(const Permutation& h) const {
  std::vector<Permutation> values(top_.order(), h);
  return base_element(values);
}

WreathProduct::Decomposition WreathProduct::decompose(const Permutation& w) const {
  if (w.degree() != degree_) throw Error("degree mismatch in wreath decomposition");
  const int d = bottom_.degree();
  std::vector<int> block_img(top_.order());
  std::vector<Permutation> values;
  values.reserve(top_.order());
  for (std::size_t t = 0; t < top_.order(); ++t) {
    int to_block = w.image(static_cast<int>(t) * d) / d;
    block_img[t] = to_block;
    std::vector<int> within(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      int y = w.image(static_cast<int>(t) * d + i);
      if (y / d != to_block) throw Error("permutation does not respect blocks");
      within[static_cast<std::size_t>(i)] = y % d;
    }
    values.push_back(Permutation::from_images(std::move(within)));
  }
  return Decomposition{Permutation::from_images(std::move(block_img)), std::move(values)};
}

FiniteGroup WreathProduct::materialize(GroupOptions opts) const {
  return FiniteGroup(degree_, generators_, opts,
                     "wreath(" + bottom_.describe() + ", " + top_.describe() + ")");
}

FiniteGroup WreathProduct::diagonal_subgroup(GroupOptions opts) const {
  std::vector<Permutation> gens;
  for (const Permutation& h : bottom_.generators()) gens.push_back(diagonal(h));
  return FiniteGroup(degree_, std::move(gens), opts, "Diag");
}

FiniteGroup WreathProduct::first_copy_subgroup(GroupOptions opts) const {
  std::vector<Permutation> gens;
  std::size_t block0 = static_cast<std::size_t>(top_.index_of(top_.identity()));
  for (const Permutation& h : bottom_.generators()) gens.push_back(coordinate(block0, h));
  return FiniteGroup(degree_, std::move(gens), opts, "first copy");
}

GroupHomomorphism WreathProduct::diagonal_embedding(const FiniteGroup& product) const {
  std::vector<Permutation> images;
  for (const Permutation& h : bottom_.generators()) images.push_back(diagonal(h));
  return GroupHomomorphism(bottom_, product, std::move(images));
}

GroupHomomorphism WreathProduct::first_copy_embedding(const FiniteGroup& product) const {
  std::vector<Permutation> images;
  std::size_t block0 = static_cast<std::size_t>(top_.index_of(top_.identity()));
  for (const Permutation& h : bottom_.generators()) images.push_back(coordinate(block0, h));
  return GroupHomomorphism(bottom_, product, std::move(images));
}

VerbalSubnormalReport verify_verbal_subnormal(const FiniteGroup& image,
                                              const FiniteGroup& g, const WordSet& v,
                                              ScanOptions opts) {
  if (!image.is_subgroup_of(g)) throw Error("image is not a subgroup of the ambient group");
  VerbalResult verbal = verbal_subgroup(g, v, opts);
  VerbalSubnormalReport report;
  report.contained = verbal.subgroup.contains_all(image);
  report.containment_exact = verbal.exact;
  report.defect = subnormal_defect(image, g);
  return report;
}

bool Prop5Result::all_verified() const {
  return !branches.empty() &&
         std::all_of(branches.begin(), branches.end(), [](const Prop5Branch& b) {
           return b.outcome == Prop5Branch::Outcome::verified;
         });
}

bool Prop5Result::any_failed() const {
  return std::any_of(branches.begin(), branches.end(), [](const Prop5Branch& b) {
    return b.outcome == Prop5Branch::Outcome::exhausted;
  });
}

namespace {

Prop5Branch run_branch(const FiniteGroup& sylow, int p, const WordSet& v,
                       const Prop5Options& opts) {
  Prop5Branch branch;
  branch.prime = p;
  branch.sylow_order = sylow.order();

  long long exp_h = exponent(sylow);
  int k = 0;
  while (exp_h > 1) { exp_h /= p; ++k; }

  for (const catalog::Entry& entry :
       catalog::p_group_candidates(p, std::max(k, 1), opts.candidate_max_order)) {
    FiniteGroup witness = catalog::build(entry.name);
    // Centrality precheck on the candidate itself: V(P) nontrivial and
    // inside the center.
    VerbalResult vp = verbal_subgroup(witness, v, opts.scan);
    if (vp.subgroup.order() == 1) {
      branch.rejected.push_back(entry.name + ": V(P) trivial");
      continue;
    }
    if (!center(witness).contains_all(vp.subgroup)) {
      branch.rejected.push_back(entry.name + ": V(P) not central");
      continue;
    }

    WreathProduct wr(sylow, witness);
    branch.witness_name = entry.name;
    branch.witness_order = witness.order();
    branch.witness_verbal_exponent = exponent(vp.subgroup);
    branch.wreath_order = wr.full_order_string();

    std::optional<std::size_t> w_order = wr.full_order();
    if (!w_order || *w_order > opts.verify_budget) {
      branch.outcome = Prop5Branch::Outcome::skipped_budget;
      return branch;
    }

    FiniteGroup product = wr.materialize(GroupOptions{.order_cap = *w_order + 1});
    if (product.order() != *w_order) throw Error("wreath order formula violated");
    FiniteGroup diag = wr.diagonal_subgroup(GroupOptions{.order_cap = *w_order + 1});
    VerbalSubnormalReport check = verify_verbal_subnormal(diag, product, v, opts.scan);
    if (check.contained && check.defect.has_value()) {
      branch.outcome = Prop5Branch::Outcome::verified;
      branch.containment = true;
      branch.diagonal_defect = check.defect;
      return branch;
    }
    branch.rejected.push_back(entry.name + ": endpoint check failed (contained=" +
                              std::string(check.contained ? "true" : "false") + ")");
  }
  branch.outcome = Prop5Branch::Outcome::exhausted;
  return branch;
}

}  // namespace

Prop5Result prop5_construct(const FiniteGroup& h, const WordSet& v, Prop5Options opts) {
  if (!v.non_trivial()) throw Error("word set must be non-trivial");
  if (!nilpotency_class(h).has_value()) {
    throw Error("group is not nilpotent");
  }

  Prop5Result result;
  if (h.order() == 1) {
    Prop5Branch branch;
    branch.prime = 0;
    branch.sylow_order = 1;
    branch.witness_name = "cyclic 1";
    branch.witness_order = 1;
    branch.wreath_order = "1";
    branch.outcome = Prop5Branch::Outcome::verified;
    branch.containment = true;
    branch.diagonal_defect = 0;
    result.branches.push_back(std::move(branch));
    return result;
  }

  std::vector<int> primes = prime_divisors(h.order());
  for (int p : primes) {
    result.branches.push_back(run_branch(sylow_subgroup(h, p), p, v, opts));
  }
  result.composed = primes.size() > 1;
  return result;
}

}  // namespace vembed
