#pragma once

// Brute-force reference computations used only by the tests.  They work
// element by element and share nothing with the class-level code paths
// they check.

#include <algorithm>
#include <optional>
#include <vector>

#include "lietab/classfun.hpp"
#include "lietab/group.hpp"

namespace lietab::oracle {

// Every invertible n x n matrix over the field, by exhaustive enumeration.
inline std::vector<Matrix> all_invertible(const MatrixSpace& S) {
  const int n = S.dim();
  const std::uint64_t q = S.F().order();
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  std::vector<Matrix> out;
  for (std::uint64_t c = 0; c < total; ++c) {
    Matrix m = S.decode(c);
    if (S.det(m) != 0) out.push_back(m);
  }
  return out;
}

// Conjugacy classes by conjugating with every group element.
inline std::vector<std::vector<std::size_t>> brute_classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x] >= 0) continue;
    std::vector<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t c = g.conjugate(y, x);
      if (seen[c] < 0) {
        seen[c] = static_cast<int>(classes.size());
        cls.push_back(c);
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

inline std::size_t count_involutions(const FiniteGroup& g) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == g.identity()) ++n;
  return n;
}

// psi^G(g) = (1/|H|) sum_{x in G} psi°(x g x^-1), element by element.
inline ClassFunction induce_elementwise(const ClassFunction& psi, const Subgroup& h) {
  const auto& G = h.parent->group;
  const auto& H = *h.sub;
  std::vector<long> pos(G.order(), -1);
  for (std::size_t i = 0; i < h.embedding.size(); ++i) pos[h.embedding[i]] = static_cast<long>(i);
  std::vector<Cyclotomic> v(h.parent->num_classes());
  for (std::size_t c = 0; c < v.size(); ++c) {
    const std::size_t g = h.parent->classes.reps[c];
    Cyclotomic acc;
    for (std::size_t x = 0; x < G.order(); ++x) {
      const long y = pos[G.conjugate(x, g)];
      if (y >= 0) acc += psi[H.classes.class_of[static_cast<std::size_t>(y)]];
    }
    v[c] = acc / Rational(static_cast<long>(H.order()));
  }
  return {h.parent, std::move(v)};
}

// (1/|G|) sum over elements, ignoring class sizes.
inline Cyclotomic inner_product_elementwise(const ClassFunction& a, const ClassFunction& b) {
  const auto& g = *a.group();
  Cyclotomic acc;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t c = g.classes.class_of[x];
    acc += a[c] * b[c].conjugate();
  }
  return acc / Rational(static_cast<long>(g.order()));
}

}  // namespace lietab::oracle

namespace lietab::oracle {

// (1/|N|) sum_{x in N} chi(x h) evaluated at every element h of P, then
// checked to be constant on P-classes.
inline std::optional<ClassFunction> truncate_elementwise(const ClassFunction& chi, const Subgroup& p,
                                                         const Subgroup& n) {
  const auto& P = *p.sub;
  const auto& G = *p.parent;
  std::vector<std::optional<Cyclotomic>> v(P.num_classes());
  for (std::size_t h = 0; h < P.order(); ++h) {
    Cyclotomic acc;
    for (std::size_t x : n.embedding) acc += chi[G.classes.class_of[p.embedding[P.group.mul(x, h)]]];
    acc = acc / Rational(static_cast<long>(n.sub->order()));
    auto& slot = v[P.classes.class_of[h]];
    if (slot && *slot != acc) return std::nullopt;
    slot = acc;
  }
  std::vector<Cyclotomic> out;
  for (auto& s : v) out.push_back(*s);
  return ClassFunction(p.sub, std::move(out));
}

}  // namespace lietab::oracle
