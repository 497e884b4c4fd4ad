#include <set>

#include "doctest.h"
#include "lietab/chartab.hpp"
#include "oracles.hpp"

using namespace lietab;

namespace {

SpacePtr space(std::uint32_t p, std::uint32_t k, int n) {
  return std::make_shared<MatrixSpace>(PrimePowerField::make(p, k), n);
}

GroupPtr full_gl(std::uint32_t p, int n) {
  auto S = space(p, 1, n);
  return classify(FiniteGroup::generate(S, oracle::all_invertible(*S)));
}

}  // namespace

TEST_CASE("structure_constants") {
  auto G = full_gl(2, 2);
  const std::size_t n = G->num_classes();
  const auto id = structure_constants(*G, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) CHECK(id.entries[j][k] == (j == k ? 1u : 0u));

  for (std::size_t i = 0; i < n; ++i) {
    const auto m = structure_constants(*G, i);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < n; ++k) total += m.entries[j][k] * G->classes.sizes[k];
      CHECK(total == G->classes.sizes[i] * G->classes.sizes[j]);
    }
  }
  // brute-force product count over C_i x C_j for one i
  const auto m2 = structure_constants(*G, 2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t cnt = 0;
      for (std::size_t x = 0; x < G->order(); ++x)
        for (std::size_t y = 0; y < G->order(); ++y)
          if (G->classes.class_of[x] == 2 && G->classes.class_of[y] == j &&
              G->group.mul(x, y) == G->classes.reps[k])
            ++cnt;
      CHECK(m2.entries[j][k] == cnt);
    }
}

TEST_CASE("structure constants of a cyclic group follow its multiplication") {
  auto S = space(7, 1, 1);
  auto C3 = classify(FiniteGroup::generate(S, {S->scalar(2)}));
  REQUIRE(C3->order() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto m = structure_constants(*C3, i);
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t prod = C3->group.mul(C3->classes.reps[i], C3->classes.reps[j]);
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(m.entries[j][k] == (C3->classes.reps[k] == prod ? 1u : 0u));
    }
  }
}

TEST_CASE("dixon_prime") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(120, 480) == 241);
  CHECK(dixon_prime(1, 1) == 3);
}

TEST_CASE("dixon_table GL(2,2) is the table of S3") {
  auto G = full_gl(2, 2);
  auto T = dixon_table(G);
  CHECK(T.degrees == std::vector<long long>{1, 1, 2});
  // S3 by class: identity, transposition (size 3), 3-cycle (size 2)
  for (const auto& chi : T.irreducibles) {
    for (std::size_t c = 0; c < 3; ++c) {
      const auto v = chi[c].as_rational();
      REQUIRE(v);
      const auto order = G->classes.rep_orders[c];
      if (chi.degree() == Cyclotomic(2)) {
        if (order == 2) CHECK(*v == 0);
        if (order == 3) CHECK(*v == -1);
      } else if (order == 3) {
        CHECK(*v == 1);
      }
    }
  }
  CHECK(orthogonality_check(T).pass);
}

TEST_CASE("dixon_table GL(2,3)") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  CHECK(T.size() == 8);
  long long s = 0;
  for (auto d : T.degrees) s += d * d;
  CHECK(s == 48);
  CHECK(orthogonality_check(T).pass);
}

TEST_CASE("dixon_table of the trivial group") {
  auto S = space(2, 1, 2);
  auto T1 = classify(FiniteGroup::generate(S, {S->identity()}));
  auto T = dixon_table(T1);
  REQUIRE(T.size() == 1);
  CHECK(T[0][0] == Cyclotomic(1));
  CHECK(orthogonality_check(T).pass);
}

TEST_CASE("orthogonality_check catches an injected fault") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  auto values = T.irreducibles[3].values();
  values[2] += Cyclotomic(1);
  T.irreducibles[3] = ClassFunction(G, values);
  const auto rep = orthogonality_check(T);
  CHECK(!rep.pass);
  bool names_row = false;
  for (const auto& v : rep.violations)
    if (v.kind == OrthogonalityViolation::Kind::row && (v.a == 3 || v.b == 3)) names_row = true;
  CHECK(names_row);
}

TEST_CASE("orthogonality_check flags a sign-flipped character") {
  auto G = full_gl(2, 2);
  auto T = dixon_table(G);
  T.irreducibles[2] = -T.irreducibles[2];
  const auto rep = orthogonality_check(T);
  CHECK(!rep.pass);
  CHECK(rep.violations.front().kind == OrthogonalityViolation::Kind::degree);
  CHECK(rep.violations.front().a == 2);
}

TEST_CASE("dixon_table GL(3,2)") {
  auto S = space(2, 1, 3);
  auto G = classify(FiniteGroup::generate(S, oracle::all_invertible(*S)));
  CHECK(G->num_classes() == 6);
  auto T = dixon_table(G);
  CHECK(orthogonality_check(T).pass);
  Cyclotomic col;
  for (const auto& chi : T.irreducibles) col += chi[0] * chi[0].conjugate();
  CHECK(col == Cyclotomic(168));
  CHECK(T.degrees == std::vector<long long>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("tables are seed independent and reproducible") {
  auto G = full_gl(5, 2);
  auto a = dixon_table(G, {.seed = 1});
  auto b = dixon_table(G, {.seed = 1});
  auto c = dixon_table(G, {.seed = 987654321});
  auto d = dixon_table(G, {.seed = 5, .random_rounds = 0});
  CHECK(a.irreducibles == b.irreducibles);
  CHECK(a.irreducibles == c.irreducibles);
  CHECK(a.irreducibles == d.irreducibles);
  CHECK(a.size() == 24);
}

TEST_CASE("values are bounded algebraic integers of the right order") {
  auto G = full_gl(5, 2);
  auto T = dixon_table(G);
  for (const auto& chi : T.irreducibles) {
    const double deg = chi.degree().to_complex().real();
    for (std::size_t c = 0; c < chi.size(); ++c) {
      const auto& v = chi[c];
      CHECK(T.exponent % static_cast<std::uint64_t>(v.order()) == 0);
      for (const auto& coef : v.coeffs()) CHECK(coef.get_den() == 1);
      const double mag = std::abs(v.to_complex());
      CHECK(mag <= deg + 1e-9);
      if (G->classes.sizes[c] == 1) CHECK(std::abs(mag - deg) < 1e-9);
    }
  }
}
