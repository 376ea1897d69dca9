#include "vembed/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "vembed/error.hpp"

namespace vembed {

Permutation::Permutation(int degree) {
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error("image sequence is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point index in cycle", i);
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree) throw ParseError("point index exceeds degree", i);
      cycle.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    saw_cycle = true;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (images[static_cast<std::size_t>(from)] != from) {
        throw ParseError("point repeated across cycles", i);
      }
      images[static_cast<std::size_t>(from)] = to;
    }
    skip_ws();
  }
  if (!saw_cycle) throw ParseError("empty permutation text", 0);
  return from_images(std::move(images));
}

Permutation Permutation::compose(const Permutation& then) const {
  if (degree() != then.degree()) throw Error("degree mismatch in composition");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    r.images_[x] = then.images_[static_cast<std::size_t>(images_[x])];
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    r.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  }
  return r;
}

Permutation Permutation::conjugate(const Permutation& by) const {
  return by.inverse().compose(*this).compose(by);
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e > 0) {
    if (e & 1ull) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

long long Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  long long result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long long len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = static_cast<std::size_t>(images_[x]);
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw Error("cannot shrink a permutation");
  Permutation r(new_degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset + degree() > new_degree) throw Error("shifted permutation exceeds degree");
  Permutation r(new_degree);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    r.images_[x + static_cast<std::size_t>(offset)] = images_[x] + offset;
  }
  return r;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace vembed
