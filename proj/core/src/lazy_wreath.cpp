#include "vembed/lazy_wreath.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "vembed/error.hpp"

namespace vembed {

Ctx make_context(FiniteGroup fibre, LazyGroup top) {
  return std::make_shared<const WreathContext>(
      WreathContext{std::move(fibre), std::move(top)});
}

struct BaseFn::Node {
  enum class Tag { step, sparse, product, inverse, translate };
  Tag tag;
  StepFn step_fn;                                   // step
  std::map<long long, Permutation> support;         // sparse
  std::shared_ptr<const Node> lhs, rhs;             // product | inverse | translate
  LazyGroup::Element translator;                    // translate

  mutable std::mutex memo_mu;
  mutable std::unordered_map<long long, Permutation> memo;
};

BaseFn::BaseFn(Ctx ctx, std::shared_ptr<const Node> node)
    : ctx_(std::move(ctx)), node_(std::move(node)) {}

BaseFn BaseFn::step(Ctx ctx, StepFn f) {
  auto node = std::make_shared<Node>();
  node->tag = Node::Tag::step;
  node->step_fn = std::move(f);
  return BaseFn(std::move(ctx), std::move(node));
}

BaseFn BaseFn::sparse(Ctx ctx, std::map<long long, Permutation> support) {
  std::erase_if(support, [](const auto& kv) { return kv.second.is_identity(); });
  auto node = std::make_shared<Node>();
  node->tag = Node::Tag::sparse;
  node->support = std::move(support);
  return BaseFn(std::move(ctx), std::move(node));
}

BaseFn BaseFn::identity(Ctx ctx) {
  int degree = ctx->fibre.degree();
  return step(std::move(ctx), StepFn::constant(Permutation(degree)));
}

bool BaseFn::is_identity_fn() const {
  if (node_->tag == Node::Tag::step) return node_->step_fn.is_constant_identity();
  if (node_->tag == Node::Tag::sparse) return node_->support.empty();
  return false;
}

std::optional<StepFn> BaseFn::as_step() const {
  if (node_->tag == Node::Tag::step) return node_->step_fn;
  if (node_->tag == Node::Tag::sparse && node_->support.empty()) {
    return StepFn::constant(Permutation(ctx_->fibre.degree()));
  }
  return std::nullopt;
}

std::optional<std::map<long long, Permutation>> BaseFn::as_sparse() const {
  if (node_->tag == Node::Tag::sparse) return node_->support;
  if (node_->tag == Node::Tag::step && node_->step_fn.is_constant_identity()) {
    return std::map<long long, Permutation>{};
  }
  return std::nullopt;
}

BaseFn BaseFn::multiply(const BaseFn& rhs) const {
  if (is_identity_fn()) return rhs;
  if (rhs.is_identity_fn()) return *this;
  if (node_->tag == Node::Tag::step && rhs.node_->tag == Node::Tag::step) {
    return step(ctx_, node_->step_fn.pointwise_multiply(rhs.node_->step_fn));
  }
  if (node_->tag == Node::Tag::sparse && rhs.node_->tag == Node::Tag::sparse) {
    std::map<long long, Permutation> merged = node_->support;
    for (const auto& [k, v] : rhs.node_->support) {
      auto it = merged.find(k);
      if (it == merged.end()) {
        merged.emplace(k, v);
      } else {
        it->second = it->second.compose(v);
      }
    }
    return sparse(ctx_, std::move(merged));
  }
  auto node = std::make_shared<Node>();
  node->tag = Node::Tag::product;
  node->lhs = node_;
  node->rhs = rhs.node_;
  return BaseFn(ctx_, std::move(node));
}

BaseFn BaseFn::inverse() const {
  if (node_->tag == Node::Tag::step) {
    return step(ctx_, node_->step_fn.pointwise_inverse());
  }
  if (node_->tag == Node::Tag::sparse) {
    std::map<long long, Permutation> inv = node_->support;
    for (auto& [k, v] : inv) v = v.inverse();
    return sparse(ctx_, std::move(inv));
  }
  auto node = std::make_shared<Node>();
  node->tag = Node::Tag::inverse;
  node->lhs = node_;
  return BaseFn(ctx_, std::move(node));
}

BaseFn BaseFn::translated(const LazyGroup::Element& by) const {
  const LazyGroup& top = ctx_->top;
  if (top.is_identity(by)) return *this;
  if (top.identity_indexed()) {
    long long k = std::get<long long>(by);
    if (node_->tag == Node::Tag::step) return step(ctx_, node_->step_fn.shifted(k));
    if (node_->tag == Node::Tag::sparse) {
      std::map<long long, Permutation> moved;
      for (const auto& [i, v] : node_->support) moved.emplace(i + k, v);
      return sparse(ctx_, std::move(moved));
    }
  }
  auto node = std::make_shared<Node>();
  node->tag = Node::Tag::translate;
  node->lhs = node_;
  node->translator = by;
  return BaseFn(ctx_, std::move(node));
}

Permutation BaseFn::eval(long long index) const {
  const Node& n = *node_;
  switch (n.tag) {
    case Node::Tag::step:
      return n.step_fn.eval(index);
    case Node::Tag::sparse: {
      auto it = n.support.find(index);
      return it == n.support.end() ? Permutation(ctx_->fibre.degree()) : it->second;
    }
    case Node::Tag::inverse:
      return BaseFn(ctx_, n.lhs).eval(index).inverse();
    case Node::Tag::product: {
      {
        std::lock_guard<std::mutex> lock(n.memo_mu);
        auto it = n.memo.find(index);
        if (it != n.memo.end()) return it->second;
      }
      Permutation value =
          BaseFn(ctx_, n.lhs).eval(index).compose(BaseFn(ctx_, n.rhs).eval(index));
      std::lock_guard<std::mutex> lock(n.memo_mu);
      return n.memo.emplace(index, std::move(value)).first->second;
    }
    case Node::Tag::translate: {
      {
        std::lock_guard<std::mutex> lock(n.memo_mu);
        auto it = n.memo.find(index);
        if (it != n.memo.end()) return it->second;
      }
      const LazyGroup& top = ctx_->top;
      long long j =
          top.index_of(top.multiply(top.element_at(index), top.inverse(n.translator)));
      Permutation value = BaseFn(ctx_, n.lhs).eval(j);
      std::lock_guard<std::mutex> lock(n.memo_mu);
      return n.memo.emplace(index, std::move(value)).first->second;
    }
  }
  throw Error("unreachable base function tag");
}

std::string BaseFn::str() const {
  const Node& n = *node_;
  switch (n.tag) {
    case Node::Tag::step:
      return n.step_fn.str();
    case Node::Tag::sparse: {
      std::string out = "sparse{";
      bool first = true;
      for (const auto& [k, v] : n.support) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(k) + ":" + v.cycle_string();
      }
      return out + "}";
    }
    case Node::Tag::inverse:
      return "inv(" + BaseFn(ctx_, n.lhs).str() + ")";
    case Node::Tag::product:
      return "(" + BaseFn(ctx_, n.lhs).str() + " * " + BaseFn(ctx_, n.rhs).str() + ")";
    case Node::Tag::translate:
      return "tr[" + ctx_->top.show(n.translator) + "](" + BaseFn(ctx_, n.lhs).str() + ")";
  }
  return "?";
}

LazyWreathElement::LazyWreathElement(Ctx ctx, LazyGroup::Element top, BaseFn base)
    : ctx_(std::move(ctx)), top_(std::move(top)), base_(std::move(base)) {}

LazyWreathElement LazyWreathElement::identity(Ctx ctx) {
  LazyGroup::Element top = ctx->top.identity();
  BaseFn base = BaseFn::identity(ctx);
  return LazyWreathElement(std::move(ctx), std::move(top), std::move(base));
}

LazyWreathElement LazyWreathElement::top_element(Ctx ctx, LazyGroup::Element top) {
  BaseFn base = BaseFn::identity(ctx);
  return LazyWreathElement(std::move(ctx), std::move(top), std::move(base));
}

LazyWreathElement LazyWreathElement::base_element(Ctx ctx, BaseFn base) {
  LazyGroup::Element top = ctx->top.identity();
  return LazyWreathElement(std::move(ctx), std::move(top), std::move(base));
}

std::string LazyWreathElement::str() const {
  return "(top=" + ctx_->top.show(top_) + "; base=" + base_.str() + ")";
}

LazyWreathElement multiply(const LazyWreathElement& a, const LazyWreathElement& b) {
  const Ctx& ctx = a.context();
  LazyGroup::Element top = ctx->top.multiply(a.top(), b.top());
  BaseFn base = a.base().translated(b.top()).multiply(b.base());
  return LazyWreathElement(ctx, std::move(top), std::move(base));
}

LazyWreathElement inverse(const LazyWreathElement& e) {
  const Ctx& ctx = e.context();
  LazyGroup::Element top = ctx->top.inverse(e.top());
  BaseFn base = e.base().inverse().translated(top);
  return LazyWreathElement(ctx, std::move(top), std::move(base));
}

LazyWreathElement conjugate(const LazyWreathElement& e, const LazyWreathElement& by) {
  return multiply(multiply(inverse(by), e), by);
}

LazyWreathElement commutator(const LazyWreathElement& a, const LazyWreathElement& b) {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

LazyWreathElement theta(const Ctx& ctx, const Permutation& h) {
  StepFn f({-1}, {h.inverse(), Permutation(ctx->fibre.degree())});
  return LazyWreathElement::base_element(ctx, BaseFn::step(ctx, std::move(f)));
}

LazyWreathElement beta(const Ctx& ctx, const Permutation& h) {
  if (!ctx->top.identity_indexed()) {
    throw Error("beta lives in fibre Wr Z with unit distinguished element");
  }
  StepFn f({-1}, {Permutation(ctx->fibre.degree()), h.inverse()});
  return LazyWreathElement::base_element(ctx, BaseFn::step(ctx, std::move(f)));
}

LazyWreathElement point_element(const Ctx& ctx, long long index, const Permutation& h) {
  Permutation id(ctx->fibre.degree());
  StepFn f({index - 1, index}, {id, h, id});
  return LazyWreathElement::base_element(ctx, BaseFn::step(ctx, std::move(f)));
}

LazyWreathElement shift_element(const Ctx& ctx, long long k) {
  if (ctx->top.kind() != LazyGroup::Kind::integers) {
    throw Error("shift elements require the integers top group");
  }
  return LazyWreathElement::top_element(ctx, LazyGroup::Element{k});
}

bool exact_comparable(const LazyWreathElement& a, const LazyWreathElement& b) {
  return a.base().as_step().has_value() && b.base().as_step().has_value();
}

bool window_equal(const LazyWreathElement& a, const LazyWreathElement& b,
                  long long window) {
  if (!a.context()->top.equal(a.top(), b.top())) return false;
  auto sa = a.base().as_step();
  auto sb = b.base().as_step();
  if (sa && sb) return *sa == *sb;
  for (long long i = -window; i <= window; ++i) {
    if (a.base_at(i) != b.base_at(i)) return false;
  }
  return true;
}

StepDVerdict verify_theta_conjugation(const Ctx& ctx, const Permutation& h) {
  StepDVerdict verdict;
  const LazyGroup& top = ctx->top;
  const Permutation id(ctx->fibre.degree());

  StepFn theta_fn({-1}, {h.inverse(), id});
  StepFn theta_inv = theta_fn.pointwise_inverse();

  LazyGroup::Element a = top.distinguished();
  LazyGroup::Element a_inv = top.inverse(a);
  auto rt = [&](long long i) {
    return top.index_of(top.multiply(top.element_at(i), a_inv));
  };

  auto check = [&](std::string name, bool value) {
    verdict.checks.emplace_back(std::move(name), value);
  };

  // Index-map facts. The tail is a^i by construction, so right translation
  // by a^-1 is i -> i-1 there; the only other index reaching the tail is
  // the index of a itself, which lands on 0.
  long long i_a = top.index_of(a);
  check("index of a is positive", i_a >= 1);
  check("map sends 0 to -1", rt(0) == -1);
  check("map sends index(a) to 0", rt(i_a) == 0);
  bool tail_ok = true;
  for (long long i : {-1ll, -2ll, -5ll, -64ll, -100000ll}) {
    tail_ok = tail_ok && rt(i) == i - 1;
  }
  check("tail moves one step down", tail_ok);
  bool positives_ok = true;
  for (long long i = 1; i <= 64; ++i) {
    if (i == i_a) continue;
    positives_ok = positives_ok && rt(i) >= 1;
  }
  check("other positive indices stay positive", positives_ok);

  // Zone values of theta(h)^-1 translated by a, times theta(h). Step
  // functions are constant on (-inf, -1] and on [0, inf), which covers each
  // zone's whole argument range.
  Permutation zone_tail = theta_inv.eval(-2).compose(theta_fn.eval(-1));
  check("zone i <= -1 cancels", zone_tail == id);
  Permutation zone_zero = theta_inv.eval(-1).compose(theta_fn.eval(0));
  check("zone i = 0 produces h", zone_zero == h);
  Permutation zone_at_a = theta_inv.eval(0).compose(theta_fn.eval(i_a));
  check("zone i = index(a) cancels", zone_at_a == id);
  Permutation zone_rest = theta_inv.right_value().compose(theta_fn.right_value());
  check("zone of remaining positive indices cancels", zone_rest == id);

  // Cross-check through the generic wreath arithmetic near zero.
  LazyWreathElement lhs =
      conjugate(LazyWreathElement::top_element(ctx, a), theta(ctx, h));
  LazyWreathElement rhs = multiply(LazyWreathElement::top_element(ctx, a),
                                   point_element(ctx, 0, h));
  bool generic_ok = ctx->top.equal(lhs.top(), rhs.top());
  for (long long i = -4; i <= 4 && generic_ok; ++i) {
    generic_ok = lhs.base_at(i) == rhs.base_at(i);
  }
  if (generic_ok) generic_ok = lhs.base_at(i_a) == rhs.base_at(i_a);
  check("generic evaluation agrees near zero", generic_ok);

  verdict.ok = std::all_of(verdict.checks.begin(), verdict.checks.end(),
                           [](const auto& c) { return c.second; });
  verdict.detail = "a = " + top.show(a) + ", index(a) = " + std::to_string(i_a);
  return verdict;
}

bool BetaEmbedding::all_ok() const {
  return first_copy_normal_in_base && base_normal_in_wreath &&
         std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.ok; });
}

BetaEmbedding beta_embedding(const Ctx& ctx) {
  BetaEmbedding result;
  result.generators.push_back(shift_element(ctx, 1));
  for (const Permutation& h : ctx->fibre.generators()) {
    result.generators.push_back(beta(ctx, h));
  }

  for (const Permutation& h : ctx->fibre.generators()) {
    BetaEmbedding::Certificate cert{
        h, commutator(beta(ctx, h), shift_element(ctx, 1)), false, false};
    LazyWreathElement expected = point_element(ctx, 0, h);
    cert.exact = exact_comparable(cert.commut, expected);
    cert.ok = window_equal(cert.commut, expected, 64);
    result.certificates.push_back(std::move(cert));
  }

  // Conjugating a point function by base elements keeps the support at 0
  // and conjugates the value; spot-checked per generator pair.
  result.first_copy_normal_in_base = true;
  for (const Permutation& h : ctx->fibre.generators()) {
    for (const Permutation& g : ctx->fibre.generators()) {
      LazyWreathElement conj = conjugate(point_element(ctx, 0, h), beta(ctx, g));
      LazyWreathElement expected =
          point_element(ctx, 0, h.conjugate(g.inverse()));
      result.first_copy_normal_in_base =
          result.first_copy_normal_in_base && window_equal(conj, expected, 16);
    }
  }

  // Conjugates of base-only elements keep a trivial top part.
  result.base_normal_in_wreath = true;
  for (const Permutation& h : ctx->fibre.generators()) {
    for (long long k : {-3ll, 1ll, 5ll}) {
      LazyWreathElement conj = conjugate(beta(ctx, h), shift_element(ctx, k));
      result.base_normal_in_wreath =
          result.base_normal_in_wreath && ctx->top.is_identity(conj.top());
    }
  }
  return result;
}

HallElement hall_element(const Ctx& ctx, long long window) {
  if (window < 2) throw Error("hall element needs a window of at least 2");
  std::map<long long, Permutation> support;
  long long placed = 0;
  bool truncated = false;
  for (std::size_t s = 0; s < ctx->fibre.order(); ++s) {
    long long pos = 1ll << s;
    if (pos > window || s >= 62) {
      truncated = true;
      break;
    }
    support.emplace(pos, ctx->fibre.element(s));
    ++placed;
  }
  return HallElement{
      LazyWreathElement::base_element(ctx, BaseFn::sparse(ctx, std::move(support))),
      truncated, placed};
}

HallCommutator hall_commutator(const Ctx& ctx, int s, int t, long long window) {
  if (s == t) throw Error("hall commutator needs distinct placements");
  if ((1ll << s) > window || (1ll << t) > window) {
    throw Error("placement exceeds the window");
  }
  LazyWreathElement m_bar = hall_element(ctx, window).element;
  LazyWreathElement a = conjugate(m_bar, shift_element(ctx, -(1ll << s)));
  LazyWreathElement b = conjugate(m_bar, shift_element(ctx, -(1ll << t)));
  HallCommutator result{commutator(a, b)};

  const Permutation ms = ctx->fibre.element(static_cast<std::size_t>(s));
  const Permutation mt = ctx->fibre.element(static_cast<std::size_t>(t));
  result.value = ms.inverse().compose(mt.inverse()).compose(ms).compose(mt);

  result.support_in_zero = true;
  result.value_matches = true;
  for (long long i = -window; i <= window; ++i) {
    Permutation v = result.element.base_at(i);
    if (i == 0) {
      if (v != result.value) {
        result.value_matches = false;
        result.offending.push_back(i);
      }
    } else if (!v.is_identity()) {
      result.support_in_zero = false;
      result.offending.push_back(i);
    }
  }
  if (!ctx->top.is_identity(result.element.top())) {
    result.support_in_zero = false;
    result.offending.push_back(1ll << 62);
  }
  return result;
}

}  // namespace vembed
