#include "lietab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace lietab {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw CharacterTableError("inverse of zero mod P");
    return pow(a, p - 2);
  }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const ModP& F) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {v : A v = 0}.
Mat nullspace(Mat a, const ModP& F) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a, F);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via Hessenberg reduction, low degree first.
Vec charpoly(Mat a, const ModP& F) {
  const std::size_t d = a.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t piv = j + 1;
    while (piv < d && a[piv][j] == 0) ++piv;
    if (piv == d) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (std::size_t r = 0; r < d; ++r) std::swap(a[r][piv], a[r][j + 1]);
    }
    const u64 inv = F.inv(a[j + 1][j]);
    for (std::size_t r = j + 2; r < d; ++r) {
      if (a[r][j] == 0) continue;
      const u64 f = F.mul(a[r][j], inv);
      for (std::size_t c = 0; c < d; ++c) a[r][c] = F.sub(a[r][c], F.mul(f, a[j + 1][c]));
      for (std::size_t rr = 0; rr < d; ++rr) a[rr][j + 1] = F.add(a[rr][j + 1], F.mul(f, a[rr][r]));
    }
  }
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    Vec cur(m + 1, 0);
    // (x - h_mm) p_{m-1}
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], p[m - 1][i]);
      cur[i] = F.sub(cur[i], F.mul(a[m - 1][m - 1], p[m - 1][i]));
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = F.mul(t, a[i][i - 1]);
      const u64 f = F.mul(t, a[i - 1][m - 1]);
      if (f)
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] = F.sub(cur[k], F.mul(f, p[i - 1][k]));
    }
    p[m] = std::move(cur);
  }
  return p[d];
}

std::vector<u64> roots(const Vec& poly, const ModP& F) {
  std::vector<u64> r;
  for (u64 x = 0; x < F.p; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, x), poly[i]);
    if (acc == 0) r.push_back(x);
  }
  return r;
}

// A subspace held as RREF rows; every vector u in it equals
// sum_s u[pivot_s] * rows[s].
struct Space {
  Mat rows;
  std::vector<std::size_t> pivots;
};

Vec apply(const Mat& m, const Vec& v, const ModP& F) {
  Vec out(m.size(), 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    u64 acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] && m[j][k]) acc = (acc + m[j][k] * v[k]) % F.p;
    out[j] = acc;
  }
  return out;
}

// Splits a space into the eigenspaces of m restricted to it.
std::vector<Space> split(const Space& s, const Mat& m, const ModP& F) {
  const std::size_t d = s.rows.size();
  Mat a(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    const Vec img = apply(m, s.rows[t], F);
    for (std::size_t r = 0; r < d; ++r) a[r][t] = img[s.pivots[r]];
  }
  const auto eig = roots(charpoly(a, F), F);
  std::vector<Space> out;
  std::size_t total = 0;
  for (u64 lambda : eig) {
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F.sub(shifted[i][i], lambda);
    const Mat null = nullspace(shifted, F);
    Space sub;
    for (const auto& c : null) {
      Vec v(s.rows[0].size(), 0);
      for (std::size_t t = 0; t < d; ++t)
        if (c[t])
          for (std::size_t k = 0; k < v.size(); ++k) v[k] = F.add(v[k], F.mul(c[t], s.rows[t][k]));
      sub.rows.push_back(std::move(v));
    }
    sub.pivots = rref(sub.rows, F);
    total += sub.rows.size();
    out.push_back(std::move(sub));
  }
  // The restriction is diagonalizable; anything else means P was unsuitable.
  if (total != d) throw CharacterTableError("class matrix not diagonalizable modulo P");
  return out;
}

std::vector<std::vector<std::vector<u64>>> all_structure_constants(const ClassedGroup& g) {
  const auto& G = g.group;
  const auto& cd = g.classes;
  const std::size_t n = cd.num_classes();
  std::vector<std::vector<std::vector<u64>>> a(n, std::vector<std::vector<u64>>(n, std::vector<u64>(n, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t z = cd.reps[k];
    for (std::size_t x = 0; x < G.order(); ++x) {
      const std::size_t y = G.mul(G.inverse(x), z);
      ++a[cd.class_of[x]][cd.class_of[y]][k];
    }
  }
  return a;
}

}  // namespace

ClassAlgebraMatrix structure_constants(const ClassedGroup& g, std::size_t i) {
  const auto& G = g.group;
  const auto& cd = g.classes;
  const std::size_t n = cd.num_classes();
  if (i >= n) throw CharacterTableError("class index out of range");
  ClassAlgebraMatrix m;
  m.i = i;
  m.entries.assign(n, std::vector<std::uint64_t>(n, 0));
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < G.order(); ++x)
    if (cd.class_of[x] == i) members.push_back(x);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t z = cd.reps[k];
    for (std::size_t x : members) {
      const std::size_t y = G.mul(G.inverse(x), z);
      ++m.entries[cd.class_of[y]][k];
    }
  }
  return m;
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  const auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<long double>(order))));
  const std::uint64_t bound = 2 * root;
  std::uint64_t p = exponent + 1;
  while (p <= bound || !is_prime(p)) p += exponent;
  return p;
}

CharacterTable dixon_table(const GroupPtr& gp, const DixonOptions& opts) {
  const ClassedGroup& g = *gp;
  const auto& cd = g.classes;
  const std::size_t n = cd.num_classes();
  const u64 order = g.order();
  const u64 e = cd.exponent;
  const ModP F{dixon_prime(e, order)};

  const auto sc = all_structure_constants(g);
  std::vector<Mat> class_mats(n, Mat(n, Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) class_mats[i][j][k] = sc[i][j][k] % F.p;

  Space whole;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    whole.rows.push_back(std::move(v));
    whole.pivots.push_back(i);
  }
  std::vector<Space> done;
  std::vector<Space> pending{whole};
  auto settle = [&](std::vector<Space>& parts) {
    std::vector<Space> still;
    for (auto& s : parts) {
      if (s.rows.size() == 1)
        done.push_back(std::move(s));
      else
        still.push_back(std::move(s));
    }
    return still;
  };
  pending = settle(pending);

  std::mt19937_64 rng(opts.seed);
  for (int round = 0; round < opts.random_rounds && !pending.empty(); ++round) {
    Mat comb(n, Vec(n, 0));
    for (std::size_t i = 1; i < n; ++i) {
      const u64 r = rng() % F.p;
      if (!r) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) comb[j][k] = F.add(comb[j][k], F.mul(r, class_mats[i][j][k]));
    }
    std::vector<Space> next;
    for (const auto& s : pending) {
      auto parts = split(s, comb, F);
      for (auto& p : parts) next.push_back(std::move(p));
    }
    pending = settle(next);
  }
  for (std::size_t i = 1; i < n && !pending.empty(); ++i) {
    std::vector<Space> next;
    for (const auto& s : pending) {
      auto parts = split(s, class_mats[i], F);
      for (auto& p : parts) next.push_back(std::move(p));
    }
    pending = settle(next);
  }
  if (!pending.empty()) throw CharacterTableError("common eigenspaces did not split");
  if (done.size() != n) throw CharacterTableError("eigenvector count differs from class count");

  // zeta_e in F_P through a primitive root
  u64 gen = 2;
  {
    std::vector<u64> fac;
    u64 m = F.p - 1;
    for (u64 d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        fac.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) fac.push_back(m);
    for (;; ++gen) {
      bool ok = true;
      for (auto f : fac)
        if (F.pow(gen, (F.p - 1) / f) == 1) ok = false;
      if (ok) break;
    }
  }
  const u64 zeta = F.pow(gen, (F.p - 1) / e);
  const auto inverse_class = power_class_map(g, -1);

  CharacterTable table;
  table.group = gp;
  table.exponent = e;
  table.prime = F.p;
  table.seed = opts.seed;

  for (const auto& s : done) {
    Vec w = s.rows[0];
    const u64 s0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s0);
    // chi(1)^2 = |G| / sum_k omega_k omega_{k^-1} / |C_k|
    u64 acc = 0;
    for (std::size_t k = 0; k < n; ++k)
      acc = F.add(acc, F.mul(F.mul(w[k], w[inverse_class[k]]), F.inv(cd.sizes[k] % F.p)));
    const u64 deg_sq = F.mul(order % F.p, F.inv(acc));
    long long degree = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (F.mul(d, d) == deg_sq) {
        degree = static_cast<long long>(d);
        break;
      }
    if (degree == 0 || order % static_cast<u64>(degree) != 0)
      throw CharacterTableError("could not recover a character degree");
    Vec chi(n);
    for (std::size_t k = 0; k < n; ++k)
      chi[k] = F.mul(F.mul(w[k], static_cast<u64>(degree)), F.inv(cd.sizes[k] % F.p));

    std::vector<Cyclotomic> values(n);
    for (std::size_t k = 0; k < n; ++k) {
      const u64 o = cd.rep_orders[k];
      const u64 zo = F.pow(zeta, e / o);
      const u64 inv_o = F.inv(o % F.p);
      std::vector<long long> mult(o, 0);
      long long total = 0;
      for (u64 j = 0; j < o; ++j) {
        u64 sum = 0;
        for (u64 l = 0; l < o; ++l) {
          const u64 val = chi[cd.powers[k][l]];
          const u64 root = F.pow(zo, (o - (j * l) % o) % o);
          sum = F.add(sum, F.mul(val, root));
        }
        const u64 m = F.mul(sum, inv_o);
        if (m > static_cast<u64>(degree)) throw CharacterTableError("eigenvalue multiplicity exceeds the degree");
        mult[j] = static_cast<long long>(m);
        total += mult[j];
      }
      if (total != degree) throw CharacterTableError("eigenvalue multiplicities do not sum to the degree");
      values[k] = Cyclotomic::from_exponents(static_cast<int>(o), mult).embed(static_cast<int>(e));
    }
    table.irreducibles.emplace_back(gp, std::move(values));
  }
  canonicalize(table);
  u64 sum_sq = 0;
  for (auto d : table.degrees) sum_sq += static_cast<u64>(d * d);
  if (sum_sq != order) throw CharacterTableError("sum of squared degrees differs from the group order");
  return table;
}

void canonicalize(CharacterTable& table) {
  std::sort(table.irreducibles.begin(), table.irreducibles.end(),
            [](const ClassFunction& a, const ClassFunction& b) {
              // trivial character first, then lexicographic in class order
              const bool ta = a == ClassFunction::trivial(a.group());
              const bool tb = b == ClassFunction::trivial(b.group());
              if (ta != tb) return ta;
              return a.compare(b) < 0;
            });
  table.degrees.clear();
  for (const auto& chi : table.irreducibles) {
    const auto d = chi.degree().as_rational();
    if (!d || d->get_den() != 1) throw CharacterTableError("character degree is not an integer");
    table.degrees.push_back(d->get_num().get_si());
  }
}

std::size_t CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i] == chi) return i;
  throw CharacterTableError("class function is not an irreducible character of the table");
}

std::size_t CharacterTable::conjugate_index(std::size_t i) const { return index_of(irreducibles.at(i).conjugate()); }

OrthogonalityReport orthogonality_check(const CharacterTable& table) {
  OrthogonalityReport rep;
  const auto& g = *table.group;
  const std::size_t n = g.num_classes();
  const std::size_t m = table.size();
  if (m != n) {
    rep.pass = false;
    rep.violations.push_back({OrthogonalityViolation::Kind::row, m, n, "table is not square"});
    return rep;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& chi = table.irreducibles[i];
    const auto d = chi.degree().as_rational();
    if (chi.group().get() != table.group.get() || !d || *d <= 0 || d->get_den() != 1 ||
        (i < table.degrees.size() && *d != static_cast<long>(table.degrees[i]))) {
      rep.pass = false;
      rep.violations.push_back({OrthogonalityViolation::Kind::degree, i, i, "degree is not a positive integer"});
    }
  }
  std::vector<std::vector<Cyclotomic>> conj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < n; ++c) conj[i].push_back(table.irreducibles[i][c].conjugate());

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Cyclotomic acc;
      for (std::size_t c = 0; c < n; ++c)
        acc += (table.irreducibles[i][c] * conj[j][c]).scaled(Rational(static_cast<long>(g.classes.sizes[c])));
      const Cyclotomic expect(static_cast<long>(i == j ? g.order() : 0));
      if (acc != expect) {
        rep.pass = false;
        std::ostringstream os;
        os << "<chi_" << i << ", chi_" << j << "> = " << (acc / Rational(static_cast<long>(g.order()))).to_string();
        rep.violations.push_back({OrthogonalityViolation::Kind::row, i, j, os.str()});
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t c2 = c; c2 < n; ++c2) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < m; ++i) acc += table.irreducibles[i][c] * conj[i][c2];
      const Cyclotomic expect(static_cast<long>(c == c2 ? g.classes.centralizer_orders[c] : 0));
      if (acc != expect) {
        rep.pass = false;
        std::ostringstream os;
        os << "column sum (" << c << ", " << c2 << ") = " << acc.to_string();
        rep.violations.push_back({OrthogonalityViolation::Kind::column, c, c2, os.str()});
      }
    }
  }
  return rep;
}

}  // namespace lietab
