#include "doctest.h"
#include "lietab/chartab.hpp"
#include "lietab/classfun.hpp"
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

bool upper(const Matrix& m) {
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < r; ++c)
      if (m.at(r, c)) return false;
  return true;
}

bool unitriangular(const Matrix& m) {
  if (!upper(m)) return false;
  for (int r = 0; r < m.n; ++r)
    if (m.at(r, r) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("inner products") {
  auto G = full_gl(2, 2);
  auto T = dixon_table(G);
  const auto one = ClassFunction::trivial(G);
  CHECK(inner_product(one, one) == Cyclotomic(1));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j)
      CHECK(inner_product(T[i], T[j]) == Cyclotomic(i == j ? 1 : 0));

  auto B = subgroup(G, upper);
  const auto ind = induce(ClassFunction::trivial(B.sub), B);
  CHECK(ind.degree() == Cyclotomic(3));
  CHECK(int_inner_product(ind, ind) == 2);

  const auto half = ClassFunction::trivial(G).scaled(Cyclotomic(Rational(1, 2)));
  CHECK_THROWS_AS(int_inner_product(half, ClassFunction::trivial(G)), ClassFunctionError);
}

TEST_CASE("inner product matches the elementwise sum") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); j += 3)
      CHECK(inner_product(T[i], T[j]) == oracle::inner_product_elementwise(T[i], T[j]));
}

TEST_CASE("regular character") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  const auto reg = ClassFunction::regular(G);
  CHECK(reg.degree() == Cyclotomic(48));
  const auto m = decompose(reg, T);
  for (std::size_t i = 0; i < T.size(); ++i) CHECK(m[i] == T.degrees[i]);
  CHECK(recombine(m, T) == reg);
}

TEST_CASE("induction agrees with the elementwise formula and Frobenius reciprocity") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  auto B = subgroup(G, upper);
  auto TB = dixon_table(B.sub);
  for (const auto& psi : TB.irreducibles) {
    const auto ind = induce(psi, B);
    CHECK(ind == oracle::induce_elementwise(psi, B));
    CHECK(ind.degree() == psi.degree() * Cyclotomic(static_cast<long>(B.index())));
    for (const auto& chi : T.irreducibles) CHECK(inner_product(ind, chi) == inner_product(psi, restrict_to(chi, B)));
  }
}

TEST_CASE("restriction") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  auto B = subgroup(G, upper);
  for (const auto& chi : T.irreducibles) {
    const auto r = restrict_to(chi, B);
    CHECK(r.degree() == chi.degree());
    for (std::size_t c = 0; c < r.size(); ++c) CHECK(r[c] == chi[B.fusion[c]]);
  }
}

TEST_CASE("truncation") {
  auto S = space(2, 1, 3);
  auto G = classify(FiniteGroup::generate(S, oracle::all_invertible(*S)));
  auto T = dixon_table(G);
  auto B = subgroup(G, upper);
  auto N_in_B = subgroup(B.sub, unitriangular);
  auto TB = dixon_table(B.sub);
  for (const auto& chi : T.irreducibles) {
    const auto t = truncate(chi, B, N_in_B);
    const auto oracle_t = oracle::truncate_elementwise(chi, B, N_in_B);
    REQUIRE(oracle_t);
    CHECK(t == *oracle_t);
    CHECK(t == project_n_trivial(chi, B, N_in_B, TB));
  }
  // over F_2 the Borel is unipotent, so truncation to B/B is the multiplicity
  // of the trivial character of B times that character: 1 + 2*chi_6 + chi_8
  const std::vector<long> mult{1, 0, 0, 2, 0, 1};
  REQUIRE(T.degrees == std::vector<long long>{1, 3, 3, 6, 7, 8});
  for (std::size_t i = 0; i < T.size(); ++i)
    CHECK(truncate(T[i], B, N_in_B) == ClassFunction::trivial(B.sub).scaled(Cyclotomic(mult[i])));

  auto not_normal = subgroup(B.sub, [](const Matrix& m) { return m.at(0, 2) == 0 && m.at(1, 2) == 0; });
  REQUIRE(not_normal.sub->order() == 2);
  CHECK_THROWS_AS(truncate(T[0], B, not_normal), ClassFunctionError);
}

TEST_CASE("truncation to a Levi-type quotient in GL(2,3)") {
  auto G = full_gl(3, 2);
  auto T = dixon_table(G);
  auto B = subgroup(G, upper);
  auto N_in_B = subgroup(B.sub, unitriangular);
  auto TB = dixon_table(B.sub);
  for (const auto& chi : T.irreducibles) {
    const auto t = truncate(chi, B, N_in_B);
    CHECK(t == project_n_trivial(chi, B, N_in_B, TB));
    // N-invariance: a truncation is constant on N-cosets, so its restriction
    // to N is a multiple of the trivial character
    const auto tn = restrict_to(t, N_in_B);
    for (std::size_t c = 0; c < tn.size(); ++c) CHECK(tn[c] == t.degree());
  }
}

TEST_CASE("Frobenius-Schur indicators") {
  auto S = space(3, 1, 2);
  auto Q8 = classify(FiniteGroup::generate(S, {S->from_rows({{0, 2}, {1, 0}}), S->from_rows({{1, 1}, {1, 2}})}));
  REQUIRE(Q8->order() == 8);
  auto T = dixon_table(Q8);
  for (const auto& chi : T.irreducibles)
    CHECK(fs_indicator_irreducible(chi) == (chi.degree() == Cyclotomic(2) ? -1 : 1));

  auto S7 = space(7, 1, 1);
  auto C3 = classify(FiniteGroup::generate(S7, {S7->scalar(2)}));
  auto T3 = dixon_table(C3);
  int zeros = 0;
  for (const auto& chi : T3.irreducibles) {
    const int e = fs_indicator_irreducible(chi);
    CHECK(e == (is_real_valued(chi) ? 1 : 0));
    zeros += e == 0;
  }
  CHECK(zeros == 2);

  CHECK_THROWS_AS(fs_indicator(ClassFunction::trivial(C3).scaled(Cyclotomic(2)), true), ClassFunctionError);
  CHECK(fs_indicator(ClassFunction::regular(C3)) == Cyclotomic(1));
}

TEST_CASE("involution count identity") {
  for (auto G : {full_gl(2, 2), full_gl(3, 2), full_gl(5, 2)}) {
    auto T = dixon_table(G);
    long long sum = 0;
    for (std::size_t i = 0; i < T.size(); ++i) sum += fs_indicator_irreducible(T[i]) * T.degrees[i];
    CHECK(sum == static_cast<long long>(oracle::count_involutions(G->group)));
  }
}

TEST_CASE("central characters") {
  auto G = full_gl(5, 2);
  auto T = dixon_table(G);
  const auto z = center(*G);
  CHECK(z.size() == 4);
  for (const auto& chi : T.irreducibles) {
    CHECK(central_character(chi, G->group.identity()) == Cyclotomic(1));
    for (std::size_t a : z)
      for (std::size_t b : z)
        CHECK(central_character(chi, G->group.mul(a, b)) == central_character(chi, a) * central_character(chi, b));
  }
  std::size_t noncentral = G->group.identity();
  for (std::size_t c = 0; c < G->num_classes(); ++c)
    if (G->classes.sizes[c] > 1) noncentral = G->classes.reps[c];
  REQUIRE(noncentral != G->group.identity());
  CHECK_THROWS_AS(central_character(T[0], noncentral), ClassFunctionError);
}

TEST_CASE("complex conjugation commutes with the operators") {
  auto G = full_gl(5, 2);
  auto T = dixon_table(G);
  auto B = subgroup(G, upper);
  auto N_in_B = subgroup(B.sub, unitriangular);
  for (const auto& chi : T.irreducibles) {
    CHECK(restrict_to(chi.conjugate(), B) == restrict_to(chi, B).conjugate());
    CHECK(truncate(chi.conjugate(), B, N_in_B) == truncate(chi, B, N_in_B).conjugate());
    CHECK(fs_indicator(chi.conjugate()) == fs_indicator(chi));
  }
}

TEST_CASE("real basis certification") {
  auto S = space(3, 1, 2);
  auto Q8 = classify(FiniteGroup::generate(S, {S->from_rows({{0, 2}, {1, 0}}), S->from_rows({{1, 1}, {1, 2}})}));
  auto T = dixon_table(Q8);
  std::size_t two = 0;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.degrees[i] == 2) two = i;

  const auto once = real_basis_decomposition(T[two], T);
  CHECK(!once.certified);
  REQUIRE(once.witness);
  CHECK(*once.witness == two);

  const auto twice = real_basis_decomposition(T[two] + T[two] + T[0], T);
  CHECK(twice.certified);
  CHECK(twice.blocks.size() == 2);

  auto S7 = space(7, 1, 1);
  auto C3 = classify(FiniteGroup::generate(S7, {S7->scalar(2)}));
  auto T3 = dixon_table(C3);
  CHECK(!real_basis_decomposition(T3[1], T3).certified);
  const auto pair = real_basis_decomposition(T3[1] + T3[2], T3);
  CHECK(pair.certified);
  REQUIRE(pair.blocks.size() == 1);
  CHECK(pair.blocks[0].kind == RealBlock::Kind::complex_pair);

  CHECK(!real_basis_decomposition(-T3[0], T3).certified);
}
