#include "vembed/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "vembed/error.hpp"

namespace vembed {
namespace catalog {

namespace {

FiniteGroup make(int degree, std::vector<Permutation> gens, std::string name) {
  return FiniteGroup(degree, std::move(gens), GroupOptions{}, std::move(name));
}

Permutation cycle_all(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation::from_images(std::move(img));
}

/// Regular representation from an abstract multiplication on {0,...,n-1}:
/// one permutation per listed generator, acting by right multiplication.
std::vector<Permutation> regular_generators(
    int n, const std::vector<int>& gen_labels,
    const std::function<int(int, int)>& mul) {
  std::vector<Permutation> gens;
  for (int g : gen_labels) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = mul(x, g);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return gens;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error("cyclic order must be positive");
  std::string name = "cyclic " + std::to_string(n);
  if (n == 1) return make(1, {}, name);
  return make(n, {cycle_all(n)}, name);
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw Error("dihedral parameter must be positive");
  std::string name = "dihedral " + std::to_string(n);
  if (n == 1) return make(2, {cycle_all(2)}, name);
  if (n == 2) {
    // Klein four group; the natural 2-point action is not faithful.
    return make(4, {cycle_all(2).extended(4), cycle_all(2).shifted(2, 4)}, name);
  }
  std::vector<int> refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
  return make(n, {cycle_all(n), Permutation::from_images(std::move(refl))}, name);
}

FiniteGroup symmetric(int n) {
  if (n < 1) throw Error("symmetric degree must be positive");
  std::string name = "symmetric " + std::to_string(n);
  if (n == 1) return make(1, {}, name);
  std::vector<Permutation> gens{Permutation::from_cycles("(0 1)", n)};
  if (n > 2) gens.push_back(cycle_all(n));
  return make(n, std::move(gens), name);
}

FiniteGroup alternating(int n) {
  if (n < 3) throw Error("alternating degree must be at least 3");
  std::string name = "alternating " + std::to_string(n);
  std::vector<Permutation> gens{Permutation::from_cycles("(0 1 2)", n)};
  if (n > 3) {
    if (n % 2 == 1) {
      gens.push_back(cycle_all(n));
    } else {
      // An (n-1)-cycle on points 1..n-1 is even for even n.
      std::vector<int> img(static_cast<std::size_t>(n));
      img[0] = 0;
      for (int i = 1; i < n; ++i) img[static_cast<std::size_t>(i)] = i % (n - 1) + 1;
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  return make(n, std::move(gens), name);
}

FiniteGroup quaternion8() {
  // Labels: 0..7 = 1, -1, i, -i, j, -j, k, -k.
  // axis 0 = scalar, 1 = i, 2 = j, 3 = k; sign in {0, 1} for {+, -}.
  auto label = [](int sign, int axis) { return axis * 2 + sign; };
  auto mul = [&](int x, int y) {
    int sx = x % 2, ax = x / 2, sy = y % 2, ay = y / 2;
    static const int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int axis = axis_table[ax][ay];
    int sign = (sx + sy + sign_table[ax][ay]) % 2;
    return label(sign, axis);
  };
  std::vector<Permutation> gens =
      regular_generators(8, {label(0, 1), label(0, 2)}, mul);
  return make(8, std::move(gens), "quaternion8");
}

FiniteGroup elementary_abelian(int p, int k) {
  if (p < 2 || k < 1) throw Error("elementary abelian parameters out of range");
  std::string name = "elementary_abelian " + std::to_string(p) + " " + std::to_string(k);
  int degree = p * k;
  std::vector<Permutation> gens;
  for (int b = 0; b < k; ++b) {
    gens.push_back(cycle_all(p).shifted(b * p, degree));
  }
  return make(degree, std::move(gens), name);
}

FiniteGroup heisenberg_mod(int p, int k) {
  if (p < 2 || k < 1) throw Error("heisenberg parameters out of range");
  long long m = ipow(p, k);
  long long n = m * m * m;
  if (n > 1 << 20) throw Error("heisenberg modulus too large");
  std::string name = "heisenberg_mod " + std::to_string(p) + " " + std::to_string(k);
  // Label (a, b, c) as a*m^2 + b*m + c; product law
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b') mod m.
  auto mul = [m](int x, int y) {
    long long ax = x / (m * m), bx = (x / m) % m, cx = x % m;
    long long ay = y / (m * m), by = (y / m) % m, cy = y % m;
    long long a = (ax + ay) % m, b = (bx + by) % m, c = (cx + cy + ax * by) % m;
    return static_cast<int>(a * m * m + b * m + c);
  };
  int ga = static_cast<int>(m * m);  // (1,0,0)
  int gb = static_cast<int>(m);      // (0,1,0)
  return make(static_cast<int>(n), regular_generators(static_cast<int>(n), {ga, gb}, mul),
              name);
}

FiniteGroup extraspecial(int p, int type) {
  if (type != 1 && type != 2) throw Error("extraspecial type must be 1 or 2");
  std::string name = "extraspecial " + std::to_string(p) + " " + std::to_string(type);
  if (p == 2) {
    return (type == 1 ? dihedral(4) : quaternion8()).renamed(name);
  }
  if (type == 1) return heisenberg_mod(p, 1).renamed(name);
  // Exponent p^2: <a, b | a^{p^2} = b^p = 1, b^-1 a b = a^{1+p}>,
  // elements a^i b^j with (i,j)(i',j') = (i + i'(1+p)^j mod p^2, j+j' mod p).
  long long p2 = static_cast<long long>(p) * p;
  int n = static_cast<int>(p2 * p);
  std::vector<long long> act(static_cast<std::size_t>(p));  // (1+p)^j mod p^2
  act[0] = 1;
  for (int j = 1; j < p; ++j) act[static_cast<std::size_t>(j)] = act[j - 1] * (1 + p) % p2;
  auto mul = [p, p2, act](int x, int y) {
    long long ix = x / p, jx = x % p;
    long long iy = y / p, jy = y % p;
    long long i = (ix + iy * act[static_cast<std::size_t>(jx)]) % p2;
    long long j = (jx + jy) % p;
    return static_cast<int>(i * p + j);
  };
  int ga = p;  // a = (1, 0)
  int gb = 1;  // b = (0, 1)
  return make(n, regular_generators(n, {ga, gb}, mul), name);
}

namespace {

struct NameParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) throw ParseError("expected catalog name", pos);
    return std::string(text.substr(start, pos - start));
  }

  int number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected integer parameter", pos);
    }
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  FiniteGroup entry() {
    std::string name = ident();
    if (name == "cyclic") return cyclic(number());
    if (name == "dihedral") return dihedral(number());
    if (name == "symmetric") return symmetric(number());
    if (name == "alternating") return alternating(number());
    if (name == "quaternion8") return quaternion8();
    if (name == "elementary_abelian") {
      int p = number();
      return elementary_abelian(p, number());
    }
    if (name == "heisenberg_mod") {
      int p = number();
      return heisenberg_mod(p, number());
    }
    if (name == "extraspecial") {
      int p = number();
      return extraspecial(p, number());
    }
    if (name == "direct_product") {
      skip_ws();
      if (pos >= text.size() || text[pos] != '(') {
        throw ParseError("expected '(' after direct_product", pos);
      }
      ++pos;
      FiniteGroup acc = entry();
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        acc = direct_product(acc, entry());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')') {
        throw ParseError("expected ')' in direct_product", pos);
      }
      ++pos;
      return acc;
    }
    throw ParseError("unknown catalog name '" + name + "'", pos);
  }
};

}  // namespace

FiniteGroup build(const std::string& text) {
  NameParser p{text};
  FiniteGroup g = p.entry();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("unexpected trailing catalog text", p.pos);
  return g;
}

FiniteGroup parse_group_spec(const std::string& text) {
  std::string_view sv(text);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  sv = trim(sv);
  if (sv.starts_with("catalog:")) {
    return build(std::string(trim(sv.substr(8))));
  }
  if (sv.starts_with("perm")) {
    sv.remove_prefix(4);
    sv = trim(sv);
    if (!sv.starts_with("degree=")) throw ParseError("expected 'degree='", 0);
    sv.remove_prefix(7);
    std::size_t i = 0;
    int degree = 0;
    while (i < sv.size() && std::isdigit(static_cast<unsigned char>(sv[i]))) {
      degree = degree * 10 + (sv[i] - '0');
      ++i;
    }
    if (i == 0) throw ParseError("expected degree value", 0);
    sv = trim(sv.substr(i));
    if (!sv.starts_with(";")) throw ParseError("expected ';' after degree", 0);
    sv = trim(sv.substr(1));
    if (!sv.starts_with("gens")) throw ParseError("expected 'gens ='", 0);
    sv = trim(sv.substr(4));
    if (!sv.starts_with("=")) throw ParseError("expected '=' after gens", 0);
    sv = trim(sv.substr(1));
    std::vector<Permutation> gens;
    // Comma-separated cycle products; an empty list means the trivial group.
    std::size_t start = 0;
    while (start < sv.size()) {
      std::size_t comma = sv.size();
      int depth = 0;
      for (std::size_t j = start; j < sv.size(); ++j) {
        if (sv[j] == '(') ++depth;
        if (sv[j] == ')') --depth;
        if (sv[j] == ',' && depth == 0) { comma = j; break; }
      }
      std::string_view piece = trim(sv.substr(start, comma - start));
      if (!piece.empty()) gens.push_back(Permutation::from_cycles(piece, degree));
      start = comma == sv.size() ? sv.size() : comma + 1;
    }
    return FiniteGroup(degree, std::move(gens), GroupOptions{},
                       "perm(degree=" + std::to_string(degree) + ")");
  }
  throw ParseError("group spec must start with 'catalog:' or 'perm'", 0);
}

namespace {

struct RawEntry {
  std::string base;
  std::vector<int> params;
  std::size_t order;

  std::string name() const {
    std::string out = base;
    for (int p : params) out += " " + std::to_string(p);
    return out;
  }
  bool operator<(const RawEntry& o) const {
    return std::tie(order, base, params) < std::tie(o.order, o.base, o.params);
  }
};

std::vector<Entry> finish(std::vector<RawEntry> raw, std::size_t max_order) {
  std::vector<RawEntry> kept;
  for (auto& e : raw) {
    if (e.order >= 1 && e.order <= max_order) kept.push_back(std::move(e));
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Entry> out;
  for (const auto& e : kept) out.push_back({e.name(), e.order});
  return out;
}

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<Entry> standard_entries(std::size_t max_order) {
  std::vector<RawEntry> raw;
  for (int n = 1; n <= 24; ++n) raw.push_back({"cyclic", {n}, static_cast<std::size_t>(n)});
  for (int n = 3; n <= 16; ++n) {
    raw.push_back({"dihedral", {n}, static_cast<std::size_t>(2 * n)});
  }
  for (int n = 2; n <= 5; ++n) raw.push_back({"symmetric", {n}, factorial(n)});
  for (int n = 3; n <= 5; ++n) raw.push_back({"alternating", {n}, factorial(n) / 2});
  raw.push_back({"quaternion8", {}, 8});
  raw.push_back({"elementary_abelian", {2, 2}, 4});
  raw.push_back({"elementary_abelian", {2, 3}, 8});
  raw.push_back({"elementary_abelian", {3, 2}, 9});
  raw.push_back({"heisenberg_mod", {2, 1}, 8});
  raw.push_back({"heisenberg_mod", {3, 1}, 27});
  raw.push_back({"extraspecial", {2, 1}, 8});
  raw.push_back({"extraspecial", {2, 2}, 8});
  raw.push_back({"extraspecial", {3, 1}, 27});
  raw.push_back({"extraspecial", {3, 2}, 27});

  std::vector<Entry> out = finish(std::move(raw), max_order);
  // A few direct products with fingerprints the plain list lacks.
  std::vector<std::pair<std::string, std::size_t>> products = {
      {"direct_product(cyclic 2, cyclic 4)", 8},
      {"direct_product(cyclic 2, symmetric 3)", 12},
      {"direct_product(cyclic 2, dihedral 4)", 16},
      {"direct_product(cyclic 2, quaternion8)", 16},
      {"direct_product(cyclic 3, symmetric 3)", 18},
      {"direct_product(cyclic 2, alternating 4)", 24},
  };
  for (auto& [name, order] : products) {
    if (order <= max_order) out.push_back({name, order});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& a, const Entry& b) {
                     return std::tie(a.order, a.name) < std::tie(b.order, b.name);
                   });
  return out;
}

std::vector<Entry> p_group_candidates(int p, int k, std::size_t max_order) {
  std::vector<Entry> base;
  auto add = [&](std::string name, std::size_t order) {
    if (order <= max_order) base.push_back({std::move(name), order});
  };
  for (int j = 1; j <= k; ++j) {
    std::size_t order = static_cast<std::size_t>(ipow(ipow(p, j), 3));
    add("heisenberg_mod " + std::to_string(p) + " " + std::to_string(j), order);
  }
  std::size_t p3 = static_cast<std::size_t>(ipow(p, 3));
  add("extraspecial " + std::to_string(p) + " 1", p3);
  add("extraspecial " + std::to_string(p) + " 2", p3);
  if (p == 2) {
    add("quaternion8", 8);
    add("dihedral 4", 8);
  }

  // Direct powers of each base candidate, while they fit.
  std::vector<Entry> out = base;
  for (const Entry& e : base) {
    std::string name = e.name;
    std::size_t order = e.order;
    for (int power = 2; power <= 4; ++power) {
      if (order > max_order / e.order) break;
      order *= e.order;
      name = "direct_product(" + name + ", " + e.name + ")";
      out.push_back({name, order});
    }
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.order, a.name) < std::tie(b.order, b.name);
  });
  return out;
}

}  // namespace catalog
}  // namespace vembed
