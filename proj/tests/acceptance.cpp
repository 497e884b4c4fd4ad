// Roster-wide acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lietab/cache.hpp"
#include "lietab/chartab.hpp"
#include "lietab/lie.hpp"
#include "lietab/verify.hpp"
#include "oracles.hpp"

using namespace lietab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
};

struct Entry {
  Family family;
  int n;
  std::uint32_t q;
  std::uint64_t expected_order;
};

const std::vector<Entry> kRoster = {
    {Family::GL, 2, 2, 6},    {Family::GL, 2, 3, 48},  {Family::GL, 3, 2, 168}, {Family::GL, 2, 5, 480},
    {Family::U, 2, 2, 18},    {Family::U, 2, 3, 96},   {Family::U, 2, 5, 720},  {Family::U, 3, 2, 648},
};

bool check_passed(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

std::vector<ClassFunction> sorted_rows(const CharacterTable& t) {
  std::vector<ClassFunction> rows = t.irreducibles;
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.compare(b) < 0; });
  return rows;
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  std::map<int, Criterion> crit;
  crit[1].title = "group orders match closed forms (each build < 30 s)";
  crit[2].title = "exact orthogonality and sum of squared degrees (each table < 60 s)";
  crit[3].title = "indicator-weighted degree sum equals involution count";
  crit[4].title = "duality is an order-2 isometry; trivial dualizes to degree |G|_p";
  crit[5].title = "indicator preserved by duality";
  crit[6].title = "central characters preserved by duality";
  crit[7].title = "Gelfand-Graev multiplicity-free; regular/semisimple counts and criteria agree";
  crit[8].title = "unitary indicator criterion, cases 1-3";
  crit[9].title = "root-negating torus element squares to the closed-form central element";
  crit[10].title = "truncation equals restrict-then-project; orthogonal truncations certified real";
  crit[11].title = "deterministic reports; tables independent of seed";

  for (const Entry& e : kRoster) {
    auto t0 = Clock::now();
    const LieGroupData data = build_lie(e.family, e.n, e.q);
    const double build_s = seconds_since(t0);
    const std::string name = data.name();
    const GroupPtr G = data.G();
    const auto& S = *data.space();
    const auto& F = S.F();

    // 1
    crit[1].require(G->order() == e.expected_order && lie_order(e.family, e.n, e.q) == e.expected_order,
                    name + " order " + std::to_string(G->order()));
    crit[1].require(build_s < 30.0, name + " build took " + std::to_string(build_s) + " s");

    // 2
    t0 = Clock::now();
    const CharacterTable table = dixon_table(G, {.seed = 1});
    const double table_s = seconds_since(t0);
    long long sum_sq = 0;
    for (long long d : table.degrees) sum_sq += d * d;
    crit[2].require(orthogonality_check(table).pass, name + " orthogonality");
    crit[2].require(table.size() == G->num_classes(), name + " table is not square");
    crit[2].require(sum_sq == static_cast<long long>(G->order()), name + " sum of squares");
    crit[2].require(table_s < 60.0, name + " table took " + std::to_string(table_s) + " s");

    const std::size_t k = table.size();
    std::vector<int> fs(k);
    for (std::size_t i = 0; i < k; ++i) fs[i] = fs_indicator_irreducible(table[i]);

    // 3
    long long weighted = 0;
    for (std::size_t i = 0; i < k; ++i) weighted += fs[i] * table.degrees[i];
    const auto invol = static_cast<long long>(oracle::count_involutions(G->group));
    crit[3].require(weighted == invol, name + " " + std::to_string(weighted) + " vs " + std::to_string(invol));

    const VerificationReport rep = verify_theorems(data, table, Theorem::all);

    // 4
    std::vector<DualityResult> duals;
    for (std::size_t i = 0; i < k; ++i) duals.push_back(duality(data, table[i]));
    for (std::size_t i = 0; i < k; ++i) {
      crit[4].require(duality(data, duals[i].virtual_char).virtual_char == table[i], name + " involution at " + std::to_string(i));
      for (std::size_t j = i; j < k; ++j)
        crit[4].require(int_inner_product(duals[i].virtual_char, duals[j].virtual_char) == (i == j ? 1 : 0),
                        name + " isometry at " + std::to_string(i) + "," + std::to_string(j));
    }
    std::uint64_t p_part = 1;
    for (std::uint64_t m = G->order(); m % data.p() == 0; m /= data.p()) p_part *= data.p();
    crit[4].require(duals[0].normalized.degree() == Cyclotomic(static_cast<long>(p_part)), name + " Steinberg degree");
    for (const char* c : {"duality-irreducible", "duality-involution", "duality-isometry", "steinberg-degree"})
      crit[4].require(check_passed(rep, c), name + " " + c);

    // 5
    for (std::size_t i = 0; i < k; ++i)
      crit[5].require(fs_indicator_irreducible(duals[i].normalized) == fs[i], name + " character " + std::to_string(i));
    crit[5].require(check_passed(rep, "fs-preservation"), name + " fs-preservation");

    // 6
    const auto zs = center(*G);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t z : zs)
        crit[6].require(central_character(table[i], z) == central_character(duals[i].normalized, z),
                        name + " character " + std::to_string(i));
    crit[6].require(check_passed(rep, "central-character-preservation"), name + " central-character-preservation");

    // 7
    for (const char* c : {"gelfand-graev-multiplicity-free", "regular-semisimple-count", "semisimple-criteria",
                          "orthogonal-symplectic-counts"})
      crit[7].require(check_passed(rep, c), name + " " + c);
    {
      const auto mult = decompose(gelfand_graev(data), table);
      std::size_t regular = 0, semisimple = 0;
      for (std::size_t i = 0; i < k; ++i) {
        crit[7].require(mult[i] == 0 || mult[i] == 1, name + " multiplicity at " + std::to_string(i));
        regular += mult[i] != 0;
        semisimple += table.degrees[i] % static_cast<long long>(data.p()) != 0;
      }
      crit[7].require(regular == semisimple, name + " regular " + std::to_string(regular) + " vs semisimple " +
                                                 std::to_string(semisimple));
    }

    if (e.family == Family::U) {
      // 8
      const Matrix zm = central_element_z(e.family, e.n, e.q);
      const std::size_t z = G->group.index_of(zm);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& r = rep.characters[i];
        if (!is_real_valued(table[i]) || !(r.regular || r.semisimple)) continue;
        const Cyclotomic omega = central_character(table[i], z);
        crit[8].require(Cyclotomic(fs[i]) == omega, name + " character " + std::to_string(i));
        if (e.n % 2 == 1 || e.q % 2 == 0) crit[8].require(fs[i] == 1, name + " case 1 at " + std::to_string(i));
      }
      const Matrix minus_i = S.scalar(F.neg(F.one()));
      if (e.q % 4 == 1 && e.n % 2 == 0) crit[8].require(zm == minus_i, name + " z is not -I");
      if (e.q % 4 == 3 && e.n % 2 == 0) {
        const Code beta = zm.at(0, 0);
        crit[8].require(zm == S.scalar(beta), name + " z is not scalar");
        crit[8].require(zm != S.identity() && zm != minus_i, name + " z is a sign");
        crit[8].require(F.mul(beta, beta) == F.neg(F.one()), name + " beta^2 != -1");
        crit[8].require(F.pow(beta, (e.q + 1) / 2) == F.neg(F.one()), name + " t^(q+1) != -1 for t^2 = beta");
        crit[8].notes.push_back(name + " z = " + S.to_string(zm));
      }
      crit[8].require(check_passed(rep, "unitary-criterion"), name + " unitary-criterion");

      // 9
      const PrasadElement pe = prasad_element(data);
      const std::size_t s2 = G->group.mul(pe.s, pe.s);
      crit[9].require(G->group.element(s2) == zm, name + " s^2 differs from the closed form");
      if (e.q % 2 == 0) crit[9].require(pe.s == G->group.identity(), name + " s is not the identity");
      for (std::size_t i = 0; i < data.simple_roots().size(); ++i) {
        const int root = data.simple_roots()[i];
        for (std::size_t h : data.N0().embedding) {
          const Matrix conj = G->group.element(G->group.conjugate(pe.s, h));
          crit[9].require(data.root_coordinate(conj, root) ==
                              F.neg(data.root_coordinate(G->group.element(h), root)),
                          name + " s does not negate root " + std::to_string(root));
        }
      }
    }

    // 10
    for (const RootSubset& J : data.stable_subsets()) {
      const Parabolic& par = data.parabolic(J.mask);
      const CharacterTable ptab = dixon_table(par.P.sub);
      for (std::size_t i = 0; i < k; ++i) {
        const auto direct = oracle::truncate_elementwise(table[i], par.P, par.N_in_P);
        const ClassFunction projected = project_n_trivial(table[i], par.P, par.N_in_P, ptab);
        const std::string where = name + " mask " + std::to_string(J.mask) + " character " + std::to_string(i);
        crit[10].require(direct && *direct == projected, where);
        crit[10].require(truncate(table[i], par.P, par.N_in_P) == projected, where + " (class formula)");
        if (fs[i] == 1) crit[10].require(real_basis_decomposition(projected, ptab).certified, where + " certificate");
      }
    }
    crit[10].require(check_passed(rep, "truncation-equivalence"), name + " truncation-equivalence");
    crit[10].require(check_passed(rep, "truncation-real-certificate"), name + " truncation-real-certificate");

    // 11
    {
      const LieGroupData again = build_lie(e.family, e.n, e.q);
      const CharacterTable again_table = dixon_table(again.G(), {.seed = 1});
      const std::string a = report_to_json(rep, 1).dump(2);
      const std::string b = report_to_json(verify_theorems(again, again_table, Theorem::all), 1).dump(2);
      crit[11].require(a == b, name + " reports differ");
      const CharacterTable other = dixon_table(G, {.seed = 20261019});
      crit[11].require(sorted_rows(other) == sorted_rows(table), name + " tables differ across seeds");
    }

    std::printf("  %-8s |G|=%-4llu classes=%-3zu build %.2fs table %.2fs\n", name.c_str(),
                static_cast<unsigned long long>(G->order()), k, build_s, table_s);
  }

  const double total = seconds_since(suite_start);
  crit[2].require(total < 600.0, "suite took " + std::to_string(total) + " s");

  bool all = true;
  for (const auto& [id, c] : crit) {
    std::printf("criterion %2d: %s  %s\n", id, c.pass ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& note : c.notes) std::printf("              %s\n", note.c_str());
    all = all && c.pass;
  }
  std::printf("suite %.1fs: %s\n", total, all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
