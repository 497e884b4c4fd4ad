#include "lietab/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace lietab {

MatrixSpace::MatrixSpace(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (!field_) throw GroupError("null field");
  if (n < 1 || n > kMaxDim) throw GroupError("matrix size out of range");
  // q^(n^2) must fit the 64-bit encoding
  long double bound = 1;
  for (int i = 0; i < n * n; ++i) bound *= field_->order();
  if (bound >= 18446744073709551615.0L) throw GroupError("matrix encoding exceeds 64 bits");
}

Matrix MatrixSpace::identity() const { return scalar(1); }

Matrix MatrixSpace::scalar(Code c) const {
  Matrix m;
  m.n = n_;
  for (int i = 0; i < n_; ++i) m.at(i, i) = c;
  return m;
}

Matrix MatrixSpace::diagonal(std::span<const Code> d) const {
  if (static_cast<int>(d.size()) != n_) throw GroupError("diagonal length mismatch");
  Matrix m;
  m.n = n_;
  for (int i = 0; i < n_; ++i) m.at(i, i) = d[i];
  return m;
}

Matrix MatrixSpace::from_rows(const std::vector<std::vector<Code>>& rows) const {
  if (static_cast<int>(rows.size()) != n_) throw GroupError("row count mismatch");
  Matrix m;
  m.n = n_;
  for (int r = 0; r < n_; ++r) {
    if (static_cast<int>(rows[r].size()) != n_) throw GroupError("column count mismatch");
    for (int c = 0; c < n_; ++c) {
      if (!field_->contains(rows[r][c])) throw GroupError("entry outside field");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<std::vector<Code>> MatrixSpace::to_rows(const Matrix& m) const {
  std::vector<std::vector<Code>> rows(n_, std::vector<Code>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) rows[r][c] = m.at(r, c);
  return rows;
}

Matrix MatrixSpace::mul(const Matrix& x, const Matrix& y) const {
  const auto& F = *field_;
  Matrix m;
  m.n = n_;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      Code acc = 0;
      for (int k = 0; k < n_; ++k) {
        const Code a = x.at(r, k);
        const Code b = y.at(k, c);
        if (a && b) acc = F.add(acc, F.mul(a, b));
      }
      m.at(r, c) = acc;
    }
  }
  return m;
}

Code MatrixSpace::det(const Matrix& x) const {
  const auto& F = *field_;
  Matrix m = x;
  Code d = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (piv < n_ && m.at(piv, c) == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (int k = 0; k < n_; ++k) std::swap(m.at(piv, k), m.at(c, k));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(c, c));
    const Code inv = F.inv(m.at(c, c));
    for (int r = c + 1; r < n_; ++r) {
      if (!m.at(r, c)) continue;
      const Code f = F.mul(m.at(r, c), inv);
      for (int k = c; k < n_; ++k) m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(c, k)));
    }
  }
  return d;
}

Matrix MatrixSpace::inverse(const Matrix& x) const {
  const auto& F = *field_;
  Matrix m = x;
  Matrix inv = identity();
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (piv < n_ && m.at(piv, c) == 0) ++piv;
    if (piv == n_) throw GroupError("matrix is singular");
    if (piv != c) {
      for (int k = 0; k < n_; ++k) {
        std::swap(m.at(piv, k), m.at(c, k));
        std::swap(inv.at(piv, k), inv.at(c, k));
      }
    }
    const Code s = F.inv(m.at(c, c));
    for (int k = 0; k < n_; ++k) {
      m.at(c, k) = F.mul(m.at(c, k), s);
      inv.at(c, k) = F.mul(inv.at(c, k), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || !m.at(r, c)) continue;
      const Code f = m.at(r, c);
      for (int k = 0; k < n_; ++k) {
        m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(c, k)));
        inv.at(r, k) = F.sub(inv.at(r, k), F.mul(f, inv.at(c, k)));
      }
    }
  }
  return inv;
}

Matrix MatrixSpace::transpose(const Matrix& x) const {
  Matrix m;
  m.n = n_;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m.at(r, c) = x.at(c, r);
  return m;
}

Matrix MatrixSpace::frobenius(const Matrix& x, long long e) const {
  Matrix m;
  m.n = n_;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m.at(r, c) = field_->frobenius(x.at(r, c), e);
  return m;
}

std::uint64_t MatrixSpace::encode(const Matrix& x) const {
  const std::uint64_t q = field_->order();
  std::uint64_t code = 0;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) code = code * q + x.at(r, c);
  return code;
}

Matrix MatrixSpace::decode(std::uint64_t code) const {
  const std::uint64_t q = field_->order();
  Matrix m;
  m.n = n_;
  for (int i = n_ * n_; i-- > 0;) {
    m.at(i / n_, i % n_) = static_cast<Code>(code % q);
    code /= q;
  }
  return m;
}

std::string MatrixSpace::to_string(const Matrix& x) const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < n_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < n_; ++c) os << (c ? ", " : "") << x.at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

FiniteGroup FiniteGroup::generate(SpacePtr space, const std::vector<Matrix>& gens, std::size_t cap) {
  if (!space) throw GroupError("null matrix space");
  for (const auto& g : gens) {
    if (g.n != space->dim()) throw GroupError("generator has the wrong size");
    for (int r = 0; r < g.n; ++r)
      for (int c = 0; c < g.n; ++c)
        if (!space->F().contains(g.at(r, c))) throw GroupError("generator entry outside the field");
    if (space->det(g) == 0) throw GroupError("generator is singular");
  }
  FiniteGroup G;
  G.space_ = space;
  G.generators_ = gens;

  const Matrix id = space->identity();
  std::unordered_set<std::uint64_t> seen{space->encode(id)};
  std::vector<Matrix> all{id};
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [&](const Matrix& x, const Matrix& y) {
      return space->encode(x) < space->encode(y);
    });
    std::vector<Matrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Matrix y = space->mul(x, g);
        if (seen.insert(space->encode(y)).second) {
          if (seen.size() > cap) throw GroupError("group exceeds the element cap of " + std::to_string(cap));
          all.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) order.emplace_back(space->encode(all[i]), i);
  std::sort(order.begin(), order.end());
  G.codes_.reserve(all.size());
  G.elements_.reserve(all.size());
  for (const auto& [code, i] : order) {
    G.codes_.push_back(code);
    G.elements_.push_back(all[i]);
  }
  G.identity_ = *G.find(id);
  G.inverse_.resize(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) G.inverse_[i] = G.index_of(space->inverse(G.elements_[i]));
  for (const auto& g : gens) G.generator_indices_.push_back(G.index_of(g));
  return G;
}

std::optional<std::size_t> FiniteGroup::find_code(std::uint64_t c) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::optional<std::size_t> FiniteGroup::find(const Matrix& m) const { return find_code(space_->encode(m)); }

std::size_t FiniteGroup::index_of(const Matrix& m) const {
  auto i = find(m);
  if (!i) throw GroupError("matrix is not an element of the group: " + space_->to_string(m));
  return *i;
}

std::size_t FiniteGroup::mul(std::size_t i, std::size_t j) const {
  return index_of(space_->mul(elements_[i], elements_[j]));
}

std::size_t FiniteGroup::conjugate(std::size_t g, std::size_t x) const {
  return index_of(space_->mul(space_->mul(elements_[g], elements_[x]), elements_[inverse_[g]]));
}

std::size_t FiniteGroup::power(std::size_t i, long long m) const {
  std::size_t base = m < 0 ? inverse_[i] : i;
  unsigned long long e = m < 0 ? static_cast<unsigned long long>(-m) : static_cast<unsigned long long>(m);
  Matrix r = space_->identity();
  Matrix b = elements_[base];
  while (e) {
    if (e & 1) r = space_->mul(r, b);
    b = space_->mul(b, b);
    e >>= 1;
  }
  return index_of(r);
}

std::size_t FiniteGroup::element_order(std::size_t i) const {
  std::size_t o = 1;
  Matrix x = elements_[i];
  const Matrix id = space_->identity();
  while (!(x == id)) {
    x = space_->mul(x, elements_[i]);
    ++o;
  }
  return o;
}

ConjugacyData conjugacy(const FiniteGroup& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjugacyData d;
  d.class_of.assign(g.order(), kUnset);
  const auto& gens = g.generators();

  auto orbit = [&](std::size_t start) {
    const std::size_t cls = d.reps.size();
    d.reps.push_back(start);
    d.class_of[start] = cls;
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (std::size_t s : gens) {
        const std::size_t y = g.conjugate(s, x);
        if (d.class_of[y] == kUnset) {
          d.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    d.sizes.push_back(queue.size());
  };

  orbit(g.identity());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (d.class_of[i] == kUnset) orbit(i);

  const std::uint64_t n = g.order();
  for (std::size_t c = 0; c < d.reps.size(); ++c) {
    if (n % d.sizes[c]) throw GroupError("class size does not divide the group order");
    d.centralizer_orders.push_back(n / d.sizes[c]);
    const std::size_t o = g.element_order(d.reps[c]);
    d.rep_orders.push_back(o);
    d.exponent = std::lcm(d.exponent, static_cast<std::uint64_t>(o));
    std::vector<std::size_t> pw(o);
    std::size_t x = g.identity();
    for (std::size_t m = 0; m < o; ++m) {
      pw[m] = d.class_of[x];
      x = g.mul(x, d.reps[c]);
    }
    d.powers.push_back(std::move(pw));
  }
  return d;
}

GroupPtr classify(FiniteGroup g) {
  auto cd = conjugacy(g);
  return std::make_shared<const ClassedGroup>(ClassedGroup{std::move(g), std::move(cd)});
}

std::vector<std::size_t> power_class_map(const ClassedGroup& g, long long m) {
  const auto& d = g.classes;
  std::vector<std::size_t> out(d.num_classes());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const long long o = static_cast<long long>(d.rep_orders[c]);
    long long r = m % o;
    if (r < 0) r += o;
    out[c] = d.powers[c][static_cast<std::size_t>(r)];
  }
  return out;
}

std::vector<std::size_t> center(const ClassedGroup& g) {
  std::vector<std::size_t> z;
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    if (g.classes.sizes[c] == 1) z.push_back(g.classes.reps[c]);
  std::sort(z.begin(), z.end());
  return z;
}

std::vector<std::size_t> greedy_generators(const FiniteGroup& g, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> gens;
  std::unordered_set<std::size_t> closure{g.identity()};
  for (std::size_t x : subset) {
    if (closure.count(x)) continue;
    gens.push_back(x);
    // extend the closure by right multiplication with all chosen generators
    std::vector<std::size_t> queue(closure.begin(), closure.end());
    std::sort(queue.begin(), queue.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t s : gens) {
        const std::size_t y = g.mul(queue[head], s);
        if (closure.insert(y).second) queue.push_back(y);
      }
    }
  }
  return gens;
}

Subgroup subgroup(const GroupPtr& parent, const std::vector<std::size_t>& element_indices) {
  const FiniteGroup& G = parent->group;
  std::vector<std::size_t> subset = element_indices;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty() || !std::binary_search(subset.begin(), subset.end(), G.identity()))
    throw GroupError("subset is not a subgroup: identity missing");

  const auto gens = greedy_generators(G, subset);
  std::vector<Matrix> gen_mats;
  for (std::size_t i : gens) gen_mats.push_back(G.element(i));
  FiniteGroup H = FiniteGroup::generate(G.space(), gen_mats);
  if (H.order() != subset.size()) throw GroupError("subset is not a subgroup: not closed");

  Subgroup s;
  s.parent = parent;
  s.embedding.resize(H.order());
  for (std::size_t i = 0; i < H.order(); ++i) {
    const std::size_t gi = G.index_of(H.element(i));
    if (!std::binary_search(subset.begin(), subset.end(), gi))
      throw GroupError("subset is not a subgroup: not closed");
    s.embedding[i] = gi;
  }
  s.sub = classify(std::move(H));
  s.fusion = class_fusion(s);
  return s;
}

Subgroup subgroup(const GroupPtr& parent, const std::function<bool(const Matrix&)>& pred) {
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < parent->order(); ++i)
    if (pred(parent->group.element(i))) subset.push_back(i);
  return subgroup(parent, subset);
}

std::vector<std::size_t> class_fusion(const Subgroup& h) {
  std::vector<std::size_t> f(h.sub->num_classes());
  for (std::size_t c = 0; c < f.size(); ++c)
    f[c] = h.parent->classes.class_of[h.embedding[h.sub->classes.reps[c]]];
  return f;
}

Subgroup compose(const Subgroup& inner, const Subgroup& outer) {
  if (inner.parent.get() != outer.sub.get()) throw GroupError("subgroups do not compose");
  Subgroup s;
  s.parent = outer.parent;
  s.sub = inner.sub;
  s.embedding.resize(inner.embedding.size());
  for (std::size_t i = 0; i < s.embedding.size(); ++i) s.embedding[i] = outer.embedding[inner.embedding[i]];
  s.fusion = class_fusion(s);
  return s;
}

bool is_normal(const Subgroup& n_in_p) {
  const FiniteGroup& P = n_in_p.parent->group;
  std::vector<std::size_t> members = n_in_p.embedding;
  std::sort(members.begin(), members.end());
  const auto& ngens = n_in_p.sub->group.generators();
  for (std::size_t s : P.generators()) {
    for (std::size_t ng : ngens) {
      const std::size_t x = P.conjugate(s, n_in_p.embedding[ng]);
      if (!std::binary_search(members.begin(), members.end(), x)) return false;
    }
  }
  return true;
}

}  // namespace lietab
