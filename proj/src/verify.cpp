#include "lietab/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace lietab {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::fs_dual: return "fs-dual";
    case Theorem::central_dual: return "central-dual";
    case Theorem::fs_central: return "fs-central";
    case Theorem::unitary: return "unitary";
    case Theorem::all: return "all";
  }
  return "all";
}

Theorem parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::fs_dual, Theorem::central_dual, Theorem::fs_central, Theorem::unitary, Theorem::all})
    if (theorem_name(t) == s) return t;
  throw LieError("unknown theorem '" + s + "'");
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::vector<std::vector<std::string>> render(const LieGroupData& data, const Matrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : data.space()->to_rows(m)) {
    std::vector<std::string> out;
    for (Code c : row) out.push_back(data.field()->to_string(c));
    rows.push_back(std::move(out));
  }
  return rows;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::uint64_t p_part(std::uint64_t order, std::uint32_t p) {
  std::uint64_t r = 1;
  while (order % p == 0) {
    order /= p;
    r *= p;
  }
  return r;
}

class Collector {
 public:
  explicit Collector(Theorem which) : which_(which) {}

  std::vector<CheckResult> take() { return {checks_.begin(), checks_.end()}; }

  bool wants(Theorem t) const { return which_ == Theorem::all || which_ == t; }

  CheckResult& add(Theorem t, std::string name) {
    checks_.push_back({std::move(name), theorem_name(t), true, {}, {}});
    return checks_.back();
  }

  static void fail(CheckResult& c, std::size_t witness) {
    c.pass = false;
    if (std::find(c.witnesses.begin(), c.witnesses.end(), witness) == c.witnesses.end())
      c.witnesses.push_back(witness);
  }

 private:
  // deque: references handed out by add stay valid
  std::deque<CheckResult> checks_;
  Theorem which_;
};

}  // namespace

VerificationReport verify_theorems(const LieGroupData& data, const CharacterTable& table, Theorem which) {
  if (table.group.get() != data.G().get()) throw LieError("table belongs to another group");
  const GroupPtr& G = data.G();
  const std::size_t k = table.size();

  VerificationReport rep;
  rep.family = family_name(data.family());
  rep.n = data.n();
  rep.q = data.q();
  rep.order = G->order();
  rep.num_classes = G->num_classes();
  Collector col(which);

  const PrasadElement pe = prasad_element(data);
  rep.z = render(data, G->group.element(pe.z));
  rep.s = render(data, G->group.element(pe.s));

  // Shared data for the per-character records.
  std::vector<DualityResult> duals;
  duals.reserve(k);
  for (const auto& chi : table.irreducibles) duals.push_back(duality(data, chi));
  const ClassFunction gamma = gelfand_graev(data);

  std::vector<std::size_t> regular;
  std::string regular_error;
  try {
    regular = regular_characters(data, table, gamma);
  } catch (const LieError& e) {
    regular_error = e.what();
  }
  const SemisimpleSets ss = semisimple_characters(data, table, gamma);

  std::vector<std::size_t> dual_index(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    CharacterRecord r;
    const auto& chi = table[i];
    r.index = i;
    r.degree = table.degrees[i];
    r.fs = fs_indicator_irreducible(chi);
    r.omega_z = central_character(chi, pe.z);
    r.regular = std::binary_search(regular.begin(), regular.end(), i);
    r.semisimple = std::binary_search(ss.by_dual_gamma.begin(), ss.by_dual_gamma.end(), i);
    r.real = is_real_valued(chi);
    r.dual_sign = duals[i].sign;
    for (std::size_t j = 0; j < k; ++j)
      if (table[j] == duals[i].normalized) dual_index[i] = j;
    r.dual = dual_index[i];
    rep.characters.push_back(std::move(r));
  }

  if (col.wants(Theorem::fs_dual)) {
    auto& irr = col.add(Theorem::fs_dual, "duality-irreducible");
    for (std::size_t i = 0; i < k; ++i)
      if (dual_index[i] == k) Collector::fail(irr, i);

    auto& inv = col.add(Theorem::fs_dual, "duality-involution");
    for (std::size_t i = 0; i < k; ++i)
      if (duality(data, duals[i].normalized).normalized != table[i]) Collector::fail(inv, i);

    auto& iso = col.add(Theorem::fs_dual, "duality-isometry");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        if (inner_product(duals[i].virtual_char, duals[j].virtual_char) != inner_product(table[i], table[j]))
          Collector::fail(iso, i);

    auto& st = col.add(Theorem::fs_dual, "steinberg-degree");
    const DualityResult triv = duality(data, ClassFunction::trivial(G));
    const std::uint64_t gp = p_part(G->order(), data.p());
    st.detail = "|G|_p = " + std::to_string(gp);
    if (triv.sign != 1 || triv.virtual_char.degree() != Cyclotomic(static_cast<long>(gp))) Collector::fail(st, 0);

    auto& fs = col.add(Theorem::fs_dual, "fs-preservation");
    for (std::size_t i = 0; i < k; ++i)
      if (dual_index[i] == k || rep.characters[i].fs != rep.characters[dual_index[i]].fs) Collector::fail(fs, i);

    auto& invol = col.add(Theorem::fs_dual, "involution-count");
    long long lhs = 0;
    for (const auto& r : rep.characters) lhs += r.fs * r.degree;
    const auto sq = power_class_map(*G, 2);
    long long rhs = 0;
    for (std::size_t c = 0; c < G->num_classes(); ++c)
      if (sq[c] == 0) rhs += static_cast<long long>(G->classes.sizes[c]);
    invol.detail = std::to_string(lhs) + " vs " + std::to_string(rhs);
    if (lhs != rhs) invol.pass = false;

    // Truncation by the defining average against projection onto the
    // N-trivial constituents, and real certification of orthogonal ones.
    auto& tr = col.add(Theorem::fs_dual, "truncation-equivalence");
    auto& cert = col.add(Theorem::fs_dual, "truncation-real-certificate");
    for (const RootSubset& J : data.stable_subsets()) {
      const Parabolic& par = data.parabolic(J.mask);
      const CharacterTable ptab = dixon_table(par.P.sub);
      for (std::size_t i = 0; i < k; ++i) {
        const ClassFunction t = truncate(table[i], par.P, par.N_in_P);
        if (t != project_n_trivial(table[i], par.P, par.N_in_P, ptab)) Collector::fail(tr, i);
        if (rep.characters[i].fs == 1 && !real_basis_decomposition(t, ptab).certified) Collector::fail(cert, i);
      }
    }
  }

  if (col.wants(Theorem::central_dual)) {
    const auto zs = center(*G);
    auto& cc = col.add(Theorem::central_dual, "central-character-preservation");
    cc.detail = std::to_string(zs.size()) + " central elements";
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t z : zs)
        if (central_character(table[i], z) != central_character(duals[i].normalized, z)) Collector::fail(cc, i);

    auto& inp = col.add(Theorem::central_dual, "center-in-parabolics");
    for (const RootSubset& J : data.stable_subsets()) {
      const auto& emb = data.parabolic(J.mask).P.embedding;
      for (std::size_t z : zs)
        if (std::find(emb.begin(), emb.end(), z) == emb.end()) {
          inp.pass = false;
          inp.detail = "J mask " + std::to_string(J.mask);
        }
    }
  }

  if (col.wants(Theorem::fs_central)) {
    auto& mf = col.add(Theorem::fs_central, "gelfand-graev-multiplicity-free");
    if (!regular_error.empty()) {
      mf.pass = false;
      mf.detail = regular_error;
    }

    auto& choice = col.add(Theorem::fs_central, "gelfand-graev-choice");
    try {
      if (gelfand_graev(data, 1) != gamma) choice.pass = false;
      choice.detail = "second non-degenerate choice compared";
    } catch (const LieError&) {
      choice.detail = "only one non-degenerate choice exists";
    }

    auto& cnt = col.add(Theorem::fs_central, "regular-semisimple-count");
    cnt.detail = std::to_string(regular.size()) + " regular, " + std::to_string(ss.by_dual_gamma.size()) + " semisimple";
    if (regular.size() != ss.by_dual_gamma.size()) cnt.pass = false;

    auto& bij = col.add(Theorem::fs_central, "duality-regular-to-semisimple");
    for (std::size_t i : regular)
      if (dual_index[i] == k || !rep.characters[dual_index[i]].semisimple) Collector::fail(bij, i);

    auto& crit = col.add(Theorem::fs_central, "semisimple-criteria");
    for (std::size_t i = 0; i < k; ++i) {
      const bool a = rep.characters[i].semisimple;
      const bool b = std::binary_search(ss.by_degree.begin(), ss.by_degree.end(), i);
      const bool c = std::binary_search(ss.by_unipotent.begin(), ss.by_unipotent.end(), i);
      if (a != b || a != c) Collector::fail(crit, i);
    }

    auto& os = col.add(Theorem::fs_central, "orthogonal-symplectic-counts");
    auto tally = [&](const std::vector<std::size_t>& set, int fs) {
      return std::count_if(set.begin(), set.end(), [&](std::size_t i) { return rep.characters[i].fs == fs; });
    };
    const auto ro = tally(regular, 1), rs = tally(regular, -1);
    const auto so = tally(ss.by_dual_gamma, 1), sy = tally(ss.by_dual_gamma, -1);
    os.detail = "regular " + std::to_string(ro) + "/" + std::to_string(rs) + ", semisimple " + std::to_string(so) +
                "/" + std::to_string(sy);
    if (ro != so || rs != sy) os.pass = false;

    auto& fz = col.add(Theorem::fs_central, "fs-equals-central-character");
    auto& alt = col.add(Theorem::fs_central, "root-negating-squares-agree");
    alt.detail = std::to_string(pe.all_z.size()) + " distinct squares";
    for (std::size_t i = 0; i < k; ++i) {
      const auto& r = rep.characters[i];
      if (!r.real || !(r.regular || r.semisimple)) continue;
      if (r.omega_z != Cyclotomic(r.fs)) Collector::fail(fz, i);
      for (std::size_t z : pe.all_z)
        if (central_character(table[i], z) != r.omega_z) Collector::fail(alt, i);
    }
  }

  if (data.family() == Family::U && col.wants(Theorem::unitary)) {
    const int n = data.n();
    const std::uint32_t q = data.q();
    const Matrix zc = central_element_z(Family::U, n, q);
    const int which_case = (n % 2 == 1 || q % 2 == 0) ? 1 : (q % 4 == 1 ? 2 : 3);

    auto& cf = col.add(Theorem::unitary, "closed-form-z");
    cf.detail = "case " + std::to_string(which_case);
    if (G->group.element(pe.z) != zc) cf.pass = false;

    if (q % 2 == 0) {
      auto& id = col.add(Theorem::unitary, "even-q-identity");
      if (pe.s != G->group.identity() || pe.z != G->group.identity()) id.pass = false;
    }

    auto& th = col.add(Theorem::unitary, "unitary-criterion");
    th.detail = "case " + std::to_string(which_case);
    const std::size_t zi = G->group.index_of(zc);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& r = rep.characters[i];
      if (!r.real || !(r.regular || r.semisimple)) continue;
      const Cyclotomic expected = which_case == 1 ? Cyclotomic(1) : central_character(table[i], zi);
      if (Cyclotomic(r.fs) != expected) Collector::fail(th, i);
    }

    if (which_case == 3) {
      auto& ns = col.add(Theorem::unitary, "non-sign-scalar");
      const auto& S = *data.space();
      ns.detail = "z = " + data.field()->to_string(zc.at(0, 0)) + " I";
      if (zc == S.identity() || zc == S.scalar(data.field()->minus_one())) ns.pass = false;
    }
  }

  rep.checks = col.take();
  for (auto& c : rep.checks) {
    std::sort(c.witnesses.begin(), c.witnesses.end());
    if (!c.witnesses.empty()) c.detail += (c.detail.empty() ? "" : "; ") + std::string("witnesses ") + join(c.witnesses);
  }
  return rep;
}

}  // namespace lietab
