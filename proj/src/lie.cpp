#include "lietab/lie.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace lietab {

std::string family_name(Family f) { return f == Family::GL ? "GL" : "U"; }

Family parse_family(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "gl") return Family::GL;
  if (t == "u" || t == "gu") return Family::U;
  throw LieError("unknown family '" + s + "' (expected gl or u)");
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw LieError("group order overflows");
  return a * b;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

// Minimal generating list for the closure of the candidates, chosen in order.
std::vector<Matrix> greedy_matrix_generators(const MatrixSpace& S, const std::vector<Matrix>& candidates) {
  std::vector<Matrix> gens;
  std::unordered_set<std::uint64_t> seen{S.encode(S.identity())};
  std::vector<Matrix> closure{S.identity()};
  for (const Matrix& m : candidates) {
    if (seen.count(S.encode(m))) continue;
    gens.push_back(m);
    std::vector<Matrix> queue = closure;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Matrix& g : gens) {
        Matrix y = S.mul(queue[head], g);
        if (seen.insert(S.encode(y)).second) {
          queue.push_back(y);
          closure.push_back(y);
        }
      }
    }
  }
  return gens;
}

// Block index of each position for the composition of n cut by the roots
// outside mask: root i in mask glues positions i-1 and i.
std::vector<int> blocks_of(int n, unsigned mask) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos < n; ++pos) block[pos] = block[pos - 1] + (((mask >> (pos - 1)) & 1u) ? 0 : 1);
  return block;
}

// Permutation matrix reversing every block of the composition.
Matrix block_reversal(const MatrixSpace& S, unsigned mask) {
  const int n = S.dim();
  const auto block = blocks_of(n, mask);
  Matrix m;
  m.n = n;
  int start = 0;
  while (start < n) {
    int end = start;
    while (end + 1 < n && block[end + 1] == block[start]) ++end;
    for (int i = start; i <= end; ++i) m.at(i, start + end - i) = S.F().one();
    start = end + 1;
  }
  return m;
}

bool is_diagonal(const Matrix& m) {
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c)
      if (r != c && m.at(r, c) != 0) return false;
  return true;
}

bool is_upper(const Matrix& m) {
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < r; ++c)
      if (m.at(r, c) != 0) return false;
  return true;
}

bool is_unitriangular(const Matrix& m) {
  if (!is_upper(m)) return false;
  for (int r = 0; r < m.n; ++r)
    if (m.at(r, r) != 1) return false;
  return true;
}

// Odometer over all assignments of field codes to the given positions.
template <class Visit>
void for_each_filling(const MatrixSpace& S, Matrix base, const std::vector<std::pair<int, int>>& slots, Code lo,
                      Visit&& visit) {
  const Code q = S.F().order();
  std::vector<Code> digit(slots.size(), lo);
  for (std::size_t k = 0; k < slots.size(); ++k) base.at(slots[k].first, slots[k].second) = lo;
  while (true) {
    visit(base);
    std::size_t k = 0;
    while (k < slots.size()) {
      if (++digit[k] < q) {
        base.at(slots[k].first, slots[k].second) = digit[k];
        break;
      }
      digit[k] = lo;
      base.at(slots[k].first, slots[k].second) = lo;
      ++k;
    }
    if (k == slots.size()) return;
  }
}

}  // namespace

std::uint64_t gl_order(int n, std::uint64_t q) {
  std::uint64_t r = 1;
  const std::uint64_t qn = ipow(q, n);
  for (int i = 0; i < n; ++i) r = checked_mul(r, qn - ipow(q, i));
  return r;
}

std::uint64_t u_order(int n, std::uint64_t q) {
  std::uint64_t r = ipow(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t qi = ipow(q, i);
    r = checked_mul(r, i % 2 == 0 ? qi - 1 : qi + 1);
  }
  return r;
}

std::uint64_t lie_order(Family f, int n, std::uint64_t q) { return f == Family::GL ? gl_order(n, q) : u_order(n, q); }

std::string LieGroupData::name() const {
  return family_name(family_) + "(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
}

Matrix LieGroupData::frobenius(const Matrix& g) const {
  if (family_ == Family::GL) return space_->frobenius(g, q_exp_);
  const Matrix w0 = block_reversal(*space_, (1u << (n_ - 1)) - 1);
  const Matrix inv_bar = space_->inverse(space_->transpose(space_->frobenius(g, q_exp_)));
  return space_->mul(space_->mul(w0, inv_bar), w0);
}

const Parabolic& LieGroupData::parabolic(unsigned mask) const {
  auto it = parabolics_.find(mask);
  if (it == parabolics_.end()) throw LieError("root subset " + std::to_string(mask) + " is not rho-stable");
  return it->second;
}

LieGroupData build_lie(Family f, int n, std::uint32_t q, std::size_t cap) {
  if (n < 1 || n > kMaxDim) throw LieError("n must lie in [1, " + std::to_string(kMaxDim) + "]");
  const auto [p, k] = prime_power_parts(q);
  const std::uint64_t expected = lie_order(f, n, q);
  if (expected > cap)
    throw LieError(family_name(f) + "(" + std::to_string(n) + "," + std::to_string(q) + ") has order " +
                   std::to_string(expected) + ", above the cap " + std::to_string(cap));

  LieGroupData d;
  d.family_ = f;
  d.n_ = n;
  d.q_ = q;
  d.p_ = p;
  d.q_exp_ = k;
  d.field_ = f == Family::GL ? PrimePowerField::make(p, k) : FieldTower::make(p, k).ext;
  d.space_ = std::make_shared<MatrixSpace>(d.field_, n);
  const MatrixSpace& S = *d.space_;
  d.rho_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    d.roots_.push_back(i);
    d.rho_[i] = f == Family::GL ? i : n - i;
  }
  for (int i = 1; i < n; ++i) {
    std::vector<int> orbit{i, d.rho_[i]};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit.front() == i) d.orbits_.push_back(orbit);
  }

  auto fixed = [&](const Matrix& m) { return d.frobenius(m) == m; };

  // Torus and unipotent radical of the Borel, by enumeration of the shapes.
  std::vector<Matrix> torus, unipotent;
  {
    std::vector<std::pair<int, int>> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
    Matrix base = S.identity();
    for_each_filling(S, base, diag, 1, [&](const Matrix& m) {
      if (fixed(m)) torus.push_back(m);
    });
    std::vector<std::pair<int, int>> upper;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) upper.emplace_back(r, c);
    if (upper.empty()) {
      unipotent.push_back(base);
    } else {
      for_each_filling(S, base, upper, 0, [&](const Matrix& m) {
        if (fixed(m)) unipotent.push_back(m);
      });
    }
  }

  std::vector<Matrix> gens = greedy_matrix_generators(S, torus);
  for (const Matrix& m : greedy_matrix_generators(S, unipotent)) gens.push_back(m);
  for (const auto& orbit : d.orbits_) {
    unsigned mask = 0;
    for (int i : orbit) mask |= 1u << (i - 1);
    gens.push_back(block_reversal(S, mask));
  }
  if (gens.empty()) gens.push_back(S.identity());
  for (const Matrix& g : gens)
    if (!fixed(g)) throw LieError("internal: generator is not Frobenius-fixed");

  FiniteGroup group = FiniteGroup::generate(d.space_, gens, std::max<std::size_t>(cap, expected));
  if (group.order() != expected)
    throw LieError("internal: closure of " + d.name() + " has order " + std::to_string(group.order()) +
                   ", expected " + std::to_string(expected));
  d.G_ = classify(std::move(group));

  d.T0_ = subgroup(d.G_, is_diagonal);
  d.B0_ = subgroup(d.G_, is_upper);
  d.N0_ = subgroup(d.G_, is_unitriangular);

  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    RootSubset J{mask, 0};
    bool stable = true;
    for (int i = 1; i < n; ++i)
      if (((mask >> (i - 1)) & 1u) && !((mask >> (d.rho_[i] - 1)) & 1u)) stable = false;
    if (!stable) continue;
    for (const auto& orbit : d.orbits_)
      if ((mask >> (orbit.front() - 1)) & 1u) ++J.orbits;
    d.subsets_.push_back(J);

    const auto block = blocks_of(n, mask);
    Parabolic par;
    par.J = J;
    par.P = subgroup(d.G_, [&](const Matrix& m) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (block[r] > block[c] && m.at(r, c) != 0) return false;
      return true;
    });
    par.N_in_P = subgroup(par.P.sub, [&](const Matrix& m) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (block[r] == block[c] && m.at(r, c) != (r == c ? 1u : 0u)) return false;
      return true;
    });
    if (!is_normal(par.N_in_P)) throw LieError("internal: N_J is not normal in P_J");
    par.N = compose(par.N_in_P, par.P);
    d.parabolics_.emplace(mask, std::move(par));
  }
  return d;
}

LieGroupData build_gl(int n, std::uint32_t q, std::size_t cap) { return build_lie(Family::GL, n, q, cap); }
LieGroupData build_u(int n, std::uint32_t q, std::size_t cap) { return build_lie(Family::U, n, q, cap); }

std::vector<RootSubset> rho_stable_subsets(const LieGroupData& data) { return data.stable_subsets(); }

const Parabolic& standard_parabolic(const LieGroupData& data, unsigned mask) { return data.parabolic(mask); }

DualityResult duality(const LieGroupData& data, const ClassFunction& chi) {
  if (chi.group().get() != data.G().get()) throw LieError("class function lives on another group");
  ClassFunction acc = ClassFunction::zero(data.G());
  for (const RootSubset& J : data.stable_subsets()) {
    const Parabolic& par = data.parabolic(J.mask);
    ClassFunction term = induce(truncate(chi, par.P, par.N_in_P), par.P);
    acc += J.orbits % 2 == 0 ? term : -term;
  }
  DualityResult r{acc, 1, acc};
  if (const auto deg = acc.degree().as_rational(); deg && *deg < 0) {
    r.sign = -1;
    r.normalized = -acc;
  }
  return r;
}

ClassFunction nondegenerate_character(const LieGroupData& data, int choice) {
  const Subgroup& N0 = data.N0();
  const PrimePowerField& F = *data.field();
  const FiniteGroup& H = N0.sub->group;

  // mu per orbit representative: the choice-th code making Tr(mu * v) nonzero
  // for some coordinate value v that actually occurs in N0.
  std::vector<std::pair<int, Code>> mus;
  for (const auto& orbit : data.root_orbits()) {
    const int r = orbit.front();
    std::vector<bool> occurs(F.order(), false);
    for (std::size_t h = 0; h < H.order(); ++h) occurs[data.root_coordinate(H.element(h), r)] = true;
    int seen = 0;
    std::optional<Code> mu;
    for (Code m = 1; m < F.order() && !mu; ++m) {
      bool nontrivial = false;
      for (Code v = 0; v < F.order() && !nontrivial; ++v)
        if (occurs[v] && F.trace(F.mul(m, v)) != 0) nontrivial = true;
      if (nontrivial && seen++ == choice) mu = m;
    }
    if (!mu) throw LieError("no non-degenerate character with choice index " + std::to_string(choice));
    mus.emplace_back(r, *mu);
  }

  const int p = static_cast<int>(data.p());
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < N0.sub->num_classes(); ++c) {
    const Matrix& h = H.element(N0.sub->classes.reps[c]);
    long long exponent = 0;
    for (const auto& [r, mu] : mus) exponent += F.trace(F.mul(mu, data.root_coordinate(h, r)));
    values.push_back(Cyclotomic::root_of_unity(p, exponent % p));
  }
  return {N0.sub, std::move(values)};
}

ClassFunction gelfand_graev(const LieGroupData& data, int choice) {
  return induce(nondegenerate_character(data, choice), data.N0());
}

std::vector<std::size_t> regular_characters(const LieGroupData&, const CharacterTable& table,
                                            const ClassFunction& gamma) {
  const auto mult = decompose(gamma, table);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 1 || mult[i] < 0)
      throw LieError("Gelfand-Graev character has multiplicity " + std::to_string(mult[i]) + " at constituent " +
                     std::to_string(i));
    if (mult[i] == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> regular_unipotent_classes(const LieGroupData& data) {
  const auto& cls = data.G()->classes;
  std::vector<std::size_t> unipotent;
  for (std::size_t c = 0; c < cls.num_classes(); ++c) {
    std::uint64_t o = cls.rep_orders[c];
    while (o % data.p() == 0) o /= data.p();
    if (o == 1 && c != 0) unipotent.push_back(c);
  }
  if (unipotent.empty()) unipotent.push_back(0);
  std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
  for (auto c : unipotent) least = std::min(least, cls.centralizer_orders[c]);
  std::vector<std::size_t> out;
  for (auto c : unipotent)
    if (cls.centralizer_orders[c] == least) out.push_back(c);
  return out;
}

Cyclotomic regular_unipotent_average(const LieGroupData& data, const ClassFunction& chi) {
  const auto& cls = data.G()->classes;
  Cyclotomic acc;
  std::uint64_t total = 0;
  for (auto c : regular_unipotent_classes(data)) {
    acc += chi[c] * Cyclotomic(static_cast<long>(cls.sizes[c]));
    total += cls.sizes[c];
  }
  return acc / Rational(static_cast<long>(total));
}

SemisimpleSets semisimple_characters(const LieGroupData& data, const CharacterTable& table,
                                     const ClassFunction& gamma) {
  const ClassFunction xi = duality(data, gamma).virtual_char;
  const auto mult = decompose(xi, table);
  SemisimpleSets s;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (mult[i] != 0) s.by_dual_gamma.push_back(i);
    if (table.degrees[i] % static_cast<long long>(data.p()) != 0) s.by_degree.push_back(i);
    if (!regular_unipotent_average(data, table[i]).is_zero()) s.by_unipotent.push_back(i);
  }
  return s;
}

PrasadElement prasad_element(const LieGroupData& data) {
  const GroupPtr& G = data.G();
  const FiniteGroup& g = G->group;
  const PrimePowerField& F = *data.field();
  const Subgroup& T0 = data.T0();
  const Subgroup& N0 = data.N0();

  std::vector<std::size_t> admissible;
  for (std::size_t s : T0.embedding) {
    bool ok = true;
    for (std::size_t h : N0.embedding) {
      const Matrix& conj = g.element(g.conjugate(s, h));
      const Matrix& orig = g.element(h);
      for (int i : data.simple_roots())
        if (data.root_coordinate(conj, i) != F.neg(data.root_coordinate(orig, i))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) admissible.push_back(s);
  }
  if (admissible.empty()) throw LieError("no torus element negates every simple root coordinate in " + data.name());

  PrasadElement out;
  out.candidates = admissible.size();
  auto key = [&](std::size_t s) { return std::make_pair(g.element_order(g.mul(s, s)), g.code(s)); };
  out.s = *std::min_element(admissible.begin(), admissible.end(),
                            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  out.z = g.mul(out.s, out.s);
  for (std::size_t s : admissible) out.all_z.push_back(g.mul(s, s));
  std::sort(out.all_z.begin(), out.all_z.end());
  out.all_z.erase(std::unique(out.all_z.begin(), out.all_z.end()), out.all_z.end());
  for (std::size_t z : out.all_z)
    if (G->classes.sizes[G->classes.class_of[z]] != 1)
      throw LieError("square of a root-negating torus element is not central in " + data.name());
  return out;
}

Matrix central_element_z(Family f, int n, std::uint32_t q) {
  if (f != Family::U) throw LieError("closed-form central element is defined for the unitary family");
  const auto [p, k] = prime_power_parts(q);
  const FieldPtr ext = FieldTower::make(p, k).ext;
  MatrixSpace S(ext, n);
  if (n % 2 == 1 || q % 2 == 0) return S.identity();
  if (q % 4 == 1) return S.scalar(ext->minus_one());
  const FieldElement t = solve_norm_minus_one(q);
  return S.scalar(ext->mul(t.code(), t.code()));
}

}  // namespace lietab
