#include "vembed/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "vembed/error.hpp"

namespace vembed {

struct FiniteGroup::Impl {
  int degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted lexicographically
  std::vector<Definition> definitions;
  std::unordered_map<Permutation, std::size_t, PermHash> index;
  std::string name;
};

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> generators,
                         GroupOptions opts, std::string name) {
  if (degree < 1) throw Error("group degree must be positive");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
  }

  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->name = std::move(name);

  // Drop duplicate and identity generators, keep input order.
  for (const Permutation& g : generators) {
    if (g.is_identity()) continue;
    if (std::find(impl->generators.begin(), impl->generators.end(), g) ==
        impl->generators.end()) {
      impl->generators.push_back(g);
    }
  }

  // Breadth-first closure in discovery order.
  std::vector<Permutation> discovered;
  std::unordered_map<Permutation, std::size_t, PermHash> seen;
  std::vector<Definition> defs;
  discovered.emplace_back(degree);
  seen.emplace(discovered.front(), 0);
  defs.push_back({0, 0});
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t cur = todo.front();
    todo.pop_front();
    for (std::size_t gi = 0; gi < impl->generators.size(); ++gi) {
      Permutation next = discovered[cur].compose(impl->generators[gi]);
      auto [it, inserted] = seen.emplace(next, discovered.size());
      if (inserted) {
        if (discovered.size() >= opts.order_cap) {
          throw CapExceeded(
              "group order cap " + std::to_string(opts.order_cap) +
                  " exceeded (partial count " + std::to_string(discovered.size()) + ")",
              discovered.size());
        }
        discovered.push_back(std::move(next));
        defs.push_back({cur, gi});
        todo.push_back(discovered.size() - 1);
      }
    }
  }

  // Canonical order with definitions remapped onto it.
  std::vector<std::size_t> perm(discovered.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return discovered[a] < discovered[b];
  });
  std::vector<std::size_t> where(discovered.size());
  for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  impl->elements.reserve(discovered.size());
  impl->definitions.resize(discovered.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    impl->elements.push_back(discovered[perm[i]]);
    const Definition& d = defs[perm[i]];
    impl->definitions[i] = {where[d.parent], d.generator};
  }
  for (std::size_t i = 0; i < impl->elements.size(); ++i) {
    impl->index.emplace(impl->elements[i], i);
  }
  impl_ = std::move(impl);
}

FiniteGroup FiniteGroup::trivial(int degree) {
  return FiniteGroup(degree, {}, GroupOptions{}, "trivial");
}

int FiniteGroup::degree() const { return impl_->degree; }
std::size_t FiniteGroup::order() const { return impl_->elements.size(); }
const std::vector<Permutation>& FiniteGroup::elements() const { return impl_->elements; }
const std::vector<Permutation>& FiniteGroup::generators() const { return impl_->generators; }
const Permutation& FiniteGroup::identity() const { return impl_->elements.front(); }
const Permutation& FiniteGroup::element(std::size_t index) const {
  return impl_->elements[index];
}
const std::vector<FiniteGroup::Definition>& FiniteGroup::definitions() const {
  return impl_->definitions;
}

long FiniteGroup::index_of(const Permutation& p) const {
  auto it = impl_->index.find(p);
  return it == impl_->index.end() ? -1 : static_cast<long>(it->second);
}

bool FiniteGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

bool FiniteGroup::contains_all(const FiniteGroup& other) const {
  if (other.degree() != degree()) return false;
  for (const Permutation& p : other.elements()) {
    if (!contains(p)) return false;
  }
  return true;
}

bool FiniteGroup::same_group(const FiniteGroup& other) const {
  return order() == other.order() && contains_all(other);
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& other) const {
  return other.contains_all(*this);
}

const std::string& FiniteGroup::name() const { return impl_->name; }

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return FiniteGroup(std::move(impl));
}

std::string FiniteGroup::describe() const {
  if (!impl_->name.empty()) return impl_->name;
  std::string out = "<";
  for (std::size_t i = 0; i < impl_->generators.size(); ++i) {
    if (i) out += ", ";
    out += impl_->generators[i].cycle_string();
  }
  out += ">";
  return out;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           GroupOptions opts) {
  int degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(g.extended(degree));
  for (const Permutation& g : b.generators()) gens.push_back(g.shifted(a.degree(), degree));
  std::string name;
  if (!a.name().empty() && !b.name().empty()) {
    name = "direct_product(" + a.name() + ", " + b.name() + ")";
  }
  return FiniteGroup(degree, std::move(gens), opts, std::move(name));
}

GroupHomomorphism::GroupHomomorphism(FiniteGroup source, FiniteGroup target,
                                     std::vector<Permutation> generator_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      generator_images_(std::move(generator_images)) {
  if (generator_images_.size() != source_.generators().size()) {
    throw Error("one image per source generator required");
  }
  for (const Permutation& im : generator_images_) {
    if (im.degree() != target_.degree()) throw Error("image degree mismatch");
    if (!target_.contains(im)) throw Error("generator image lies outside target");
  }

  // Extend along the BFS factorization.
  element_images_.resize(source_.order());
  element_images_[0] = target_.identity();
  const auto& defs = source_.definitions();
  // definitions() entries reference parents discovered earlier in BFS order,
  // but the table is stored in canonical order; process by increasing BFS
  // depth via repeated sweeps (each element's parent precedes it in BFS, so
  // at most order() sweeps; in practice a few).
  std::vector<bool> done(source_.order(), false);
  done[0] = true;
  std::size_t remaining = source_.order() - 1;
  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t i = 1; i < source_.order(); ++i) {
      if (done[i] || !done[defs[i].parent]) continue;
      element_images_[i] =
          element_images_[defs[i].parent].compose(generator_images_[defs[i].generator]);
      done[i] = true;
      --remaining;
      progressed = true;
    }
    if (!progressed) throw Error("broken factorization table");
  }

  // Full multiplicativity check.
  for (std::size_t i = 0; i < source_.order(); ++i) {
    for (std::size_t j = 0; j < source_.order(); ++j) {
      Permutation prod = source_.element(i).compose(source_.element(j));
      long k = source_.index_of(prod);
      if (element_images_[static_cast<std::size_t>(k)] !=
          element_images_[i].compose(element_images_[j])) {
        throw Error("generator images do not define a homomorphism");
      }
    }
  }
}

const Permutation& GroupHomomorphism::apply(const Permutation& source_element) const {
  long i = source_.index_of(source_element);
  if (i < 0) throw Error("element outside homomorphism source");
  return element_images_[static_cast<std::size_t>(i)];
}

std::vector<Permutation> GroupHomomorphism::image_elements() const {
  std::vector<Permutation> out = element_images_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteGroup GroupHomomorphism::image(GroupOptions opts) const {
  return FiniteGroup(target_.degree(), generator_images_, opts);
}

bool GroupHomomorphism::is_injective() const {
  return image_elements().size() == source_.order();
}

}  // namespace vembed
