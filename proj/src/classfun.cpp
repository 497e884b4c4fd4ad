#include "lietab/classfun.hpp"

#include <algorithm>

#include "lietab/chartab.hpp"

namespace lietab {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw ClassFunctionError("class function without a group");
  if (values_.size() != group_->num_classes())
    throw ClassFunctionError("class function length differs from the number of classes");
}

ClassFunction ClassFunction::zero(const GroupPtr& g) {
  return {g, std::vector<Cyclotomic>(g->num_classes())};
}

ClassFunction ClassFunction::trivial(const GroupPtr& g) {
  return {g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(1))};
}

ClassFunction ClassFunction::regular(const GroupPtr& g) {
  std::vector<Cyclotomic> v(g->num_classes());
  v[0] = Cyclotomic(static_cast<long>(g->order()));
  return {g, std::move(v)};
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (group_.get() != o.group_.get()) throw ClassFunctionError("class functions live on different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  ClassFunction r = *this;
  r += o;
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
  return *this;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  require_same_group(o);
  ClassFunction r = *this;
  for (std::size_t c = 0; c < values_.size(); ++c) r.values_[c] -= o.values_[c];
  return r;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

ClassFunction ClassFunction::scaled(const Cyclotomic& s) const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v * s;
  return r;
}

ClassFunction ClassFunction::conjugate() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conjugate();
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_.get() == o.group_.get() && values_ == o.values_;
}

int ClassFunction::compare(const ClassFunction& o) const {
  require_same_group(o);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    const int r = values_[c].compare(o.values_[c]);
    if (r) return r;
  }
  return 0;
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.group().get() != psi.group().get()) throw ClassFunctionError("inner product across different groups");
  const auto& g = *phi.group();
  Cyclotomic acc;
  for (std::size_t c = 0; c < phi.size(); ++c) {
    if (phi[c].is_zero() || psi[c].is_zero()) continue;
    acc += (phi[c] * psi[c].conjugate()).scaled(Rational(static_cast<long>(g.classes.sizes[c])));
  }
  return acc / Rational(static_cast<long>(g.order()));
}

long long int_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  const auto r = inner_product(phi, psi).as_rational();
  if (!r || r->get_den() != 1) throw ClassFunctionError("inner product is not an integer");
  return r->get_num().get_si();
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group().get() != h.parent.get()) throw ClassFunctionError("restriction from a different group");
  std::vector<Cyclotomic> v(h.sub->num_classes());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = chi[h.fusion[c]];
  return {h.sub, std::move(v)};
}

ClassFunction induce(const ClassFunction& psi, const Subgroup& h) {
  if (psi.group().get() != h.sub.get()) throw ClassFunctionError("induction from a different group");
  const auto& G = *h.parent;
  const auto& H = *h.sub;
  std::vector<Cyclotomic> v(G.num_classes());
  for (std::size_t c = 0; c < H.num_classes(); ++c) {
    if (psi[c].is_zero()) continue;
    v[h.fusion[c]] += psi[c] / Rational(static_cast<long>(H.classes.centralizer_orders[c]));
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) v[k] = v[k].scaled(Rational(static_cast<long>(G.classes.centralizer_orders[k])));
  return {h.parent, std::move(v)};
}

ClassFunction truncate(const ClassFunction& chi, const Subgroup& p, const Subgroup& n) {
  if (chi.group().get() != p.parent.get()) throw ClassFunctionError("truncation from a different group");
  if (n.parent.get() != p.sub.get()) throw ClassFunctionError("N is not a subgroup of P");
  if (!is_normal(n)) throw ClassFunctionError("N is not normal in P");
  const auto& P = *p.sub;
  const auto& G = *p.parent;
  const Rational n_order(static_cast<long>(n.sub->order()));
  std::vector<Cyclotomic> v(P.num_classes());
  std::vector<long> hist(G.num_classes());
  for (std::size_t c = 0; c < P.num_classes(); ++c) {
    std::fill(hist.begin(), hist.end(), 0);
    const std::size_t h = P.classes.reps[c];
    for (std::size_t x : n.embedding) ++hist[G.classes.class_of[p.embedding[P.group.mul(x, h)]]];
    Cyclotomic acc;
    for (std::size_t k = 0; k < hist.size(); ++k)
      if (hist[k]) acc += chi[k].scaled(Rational(hist[k]));
    v[c] = acc / n_order;
  }
  return {p.sub, std::move(v)};
}

Cyclotomic fs_indicator(const ClassFunction& chi, bool irreducible) {
  const auto& g = *chi.group();
  const auto sq = power_class_map(g, 2);
  Cyclotomic acc;
  for (std::size_t c = 0; c < chi.size(); ++c)
    acc += chi[sq[c]].scaled(Rational(static_cast<long>(g.classes.sizes[c])));
  acc = acc / Rational(static_cast<long>(g.order()));
  if (irreducible) {
    const auto r = acc.as_rational();
    if (!r || (*r != 0 && *r != 1 && *r != -1))
      throw ClassFunctionError("indicator of an irreducible is not -1, 0 or 1: " + acc.to_string());
  }
  return acc;
}

int fs_indicator_irreducible(const ClassFunction& chi) {
  return static_cast<int>(fs_indicator(chi, true).as_rational()->get_num().get_si());
}

Cyclotomic central_character(const ClassFunction& chi, std::size_t z) {
  const auto& g = *chi.group();
  if (z >= g.order()) throw ClassFunctionError("element index out of range");
  const std::size_t c = g.classes.class_of[z];
  if (g.classes.sizes[c] != 1) throw ClassFunctionError("element is not central");
  const auto d = chi.degree().as_rational();
  if (!d || *d == 0) throw ClassFunctionError("central character needs a nonzero rational degree");
  return chi[c] / *d;
}

bool is_real_valued(const ClassFunction& chi) {
  for (const auto& v : chi.values())
    if (!v.is_real()) return false;
  return true;
}

std::vector<long long> decompose(const ClassFunction& phi, const CharacterTable& table) {
  if (phi.group().get() != table.group.get()) throw ClassFunctionError("decomposition over a different group");
  std::vector<long long> m(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto r = inner_product(phi, table[i]).as_rational();
    if (!r || r->get_den() != 1)
      throw ClassFunctionError("non-integer multiplicity for constituent " + std::to_string(i) +
                               ": not a virtual character");
    m[i] = r->get_num().get_si();
  }
  return m;
}

ClassFunction recombine(const std::vector<long long>& mult, const CharacterTable& table) {
  ClassFunction acc = ClassFunction::zero(table.group);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) acc += table[i].scaled(Cyclotomic(static_cast<long>(mult[i])));
  return acc;
}

ClassFunction project_n_trivial(const ClassFunction& chi, const Subgroup& p, const Subgroup& n,
                                const CharacterTable& p_table) {
  if (n.parent.get() != p.sub.get()) throw ClassFunctionError("N is not a subgroup of P");
  const ClassFunction res = restrict_to(chi, p);
  const auto mult = decompose(res, p_table);
  std::vector<std::size_t> n_classes = n.fusion;
  std::sort(n_classes.begin(), n_classes.end());
  n_classes.erase(std::unique(n_classes.begin(), n_classes.end()), n_classes.end());
  ClassFunction acc = ClassFunction::zero(p.sub);
  for (std::size_t i = 0; i < p_table.size(); ++i) {
    if (!mult[i]) continue;
    const auto& psi = p_table[i];
    bool n_in_kernel = true;
    for (std::size_t c : n_classes)
      if (psi[c] != psi.degree()) n_in_kernel = false;
    if (n_in_kernel) acc += psi.scaled(Cyclotomic(static_cast<long>(mult[i])));
  }
  return acc;
}

RealCertificate real_basis_decomposition(const ClassFunction& phi, const CharacterTable& table) {
  RealCertificate cert;
  const auto mult = decompose(phi, table);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0) {
      cert.witness = i;
      cert.reason = "negative multiplicity";
      return cert;
    }
  }
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    const int eps = fs_indicator_irreducible(table[i]);
    if (eps == 1) {
      cert.blocks.push_back({RealBlock::Kind::orthogonal, i, i, mult[i]});
    } else if (eps == -1) {
      if (mult[i] % 2) {
        cert.witness = i;
        cert.reason = "symplectic constituent with odd multiplicity";
        return cert;
      }
      cert.blocks.push_back({RealBlock::Kind::symplectic, i, i, mult[i] / 2});
    } else {
      const std::size_t j = table.conjugate_index(i);
      if (mult[j] != mult[i]) {
        cert.witness = i;
        cert.reason = "non-real constituent without a matching conjugate";
        return cert;
      }
      if (i < j) cert.blocks.push_back({RealBlock::Kind::complex_pair, i, j, mult[i]});
    }
  }
  cert.certified = true;
  return cert;
}

}  // namespace lietab
