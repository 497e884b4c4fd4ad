#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "lietab/group.hpp"
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

std::multiset<std::uint64_t> sizes_of(const ConjugacyData& d) { return {d.sizes.begin(), d.sizes.end()}; }

}  // namespace

TEST_CASE("generate") {
  auto S = space(2, 1, 2);
  const Matrix a = S->from_rows({{1, 1}, {0, 1}});
  const Matrix b = S->from_rows({{0, 1}, {1, 0}});
  auto G = FiniteGroup::generate(S, {a, b});
  CHECK(G.order() == 6);
  CHECK(G.order() == oracle::all_invertible(*S).size());

  auto S5 = space(5, 1, 2);
  auto C4 = FiniteGroup::generate(S5, {S5->from_rows({{2, 0}, {0, 1}})});
  CHECK(C4.order() == 4);

  auto T = FiniteGroup::generate(S5, {S5->identity()});
  CHECK(T.order() == 1);
  CHECK(T.identity() == 0);

  CHECK_THROWS_AS(FiniteGroup::generate(S5, {S5->from_rows({{1, 1}, {1, 1}})}), GroupError);
  auto S3 = space(3, 1, 2);
  CHECK_THROWS_AS(FiniteGroup::generate(S3, oracle::all_invertible(*S3), 10), GroupError);
}

TEST_CASE("generate is independent of generator order") {
  auto S = space(3, 1, 2);
  const Matrix a = S->from_rows({{1, 1}, {0, 1}});
  const Matrix b = S->from_rows({{0, 2}, {1, 0}});
  const Matrix c = S->from_rows({{2, 0}, {0, 1}});
  auto G1 = FiniteGroup::generate(S, {a, b, c});
  auto G2 = FiniteGroup::generate(S, {c, a, b});
  CHECK(G1.order() == 48);
  CHECK(G1.codes() == G2.codes());
}

TEST_CASE("inverse table is an involution matching matrix inversion") {
  auto G = full_gl(3, 2);
  const auto& g = G->group;
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.inverse(g.inverse(i)) == i);
    CHECK(g.mul(i, g.inverse(i)) == g.identity());
  }
}

TEST_CASE("closure is exhaustive for GL(2,3)") {
  auto G = full_gl(3, 2);
  const auto& g = G->group;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) CHECK(g.find(g.space()->mul(g.element(i), g.element(j))));
}

TEST_CASE("conjugacy") {
  auto G = full_gl(2, 2);
  CHECK(G->num_classes() == 3);
  CHECK(sizes_of(G->classes) == std::multiset<std::uint64_t>{1, 2, 3});
  CHECK(G->classes.reps[0] == G->group.identity());

  auto S5 = space(5, 1, 2);
  auto A = classify(FiniteGroup::generate(S5, {S5->from_rows({{2, 0}, {0, 1}}), S5->from_rows({{1, 0}, {0, 3}})}));
  CHECK(A->order() == 16);
  CHECK(A->num_classes() == 16);

  auto G3 = full_gl(3, 2);
  CHECK(G3->num_classes() == 8);
  std::uint64_t total = 0;
  for (auto s : G3->classes.sizes) total += s;
  CHECK(total == 48);
}

TEST_CASE("conjugacy agrees with brute-force partition") {
  for (auto G : {full_gl(2, 2), full_gl(3, 2), full_gl(5, 2)}) {
    const auto brute = oracle::brute_classes(G->group);
    CHECK(brute.size() == G->num_classes());
    for (const auto& cls : brute) {
      const std::size_t c = G->classes.class_of[cls[0]];
      CHECK(G->classes.sizes[c] == cls.size());
      for (std::size_t x : cls) CHECK(G->classes.class_of[x] == c);
    }
    for (std::size_t c = 0; c < G->num_classes(); ++c)
      CHECK(G->classes.sizes[c] * G->classes.centralizer_orders[c] == G->order());
  }
}

TEST_CASE("power_class_map") {
  auto G = full_gl(2, 2);
  const auto id = power_class_map(*G, 1);
  for (std::size_t c = 0; c < id.size(); ++c) CHECK(id[c] == c);
  for (auto c : power_class_map(*G, static_cast<long long>(G->order()))) CHECK(c == 0);
  const auto sq = power_class_map(*G, 2);
  for (std::size_t c = 0; c < G->num_classes(); ++c) {
    if (G->classes.rep_orders[c] == 2) CHECK(sq[c] == 0);
    if (G->classes.rep_orders[c] == 3) CHECK(sq[c] == c);
  }
  // well defined: every class member squares into the same class
  auto G3 = full_gl(3, 2);
  const auto sq3 = power_class_map(*G3, 2);
  for (std::size_t x = 0; x < G3->order(); ++x) {
    const std::size_t x2 = G3->group.mul(x, x);
    CHECK(G3->classes.class_of[x2] == sq3[G3->classes.class_of[x]]);
  }
}

TEST_CASE("involution count from the power map matches a direct count") {
  for (auto G : {full_gl(2, 2), full_gl(3, 2), full_gl(5, 2)}) {
    const auto sq = power_class_map(*G, 2);
    std::uint64_t n = 0;
    for (std::size_t c = 0; c < G->num_classes(); ++c)
      if (sq[c] == 0) n += G->classes.sizes[c];
    CHECK(n == oracle::count_involutions(G->group));
  }
}

TEST_CASE("center") {
  auto G = full_gl(3, 2);
  const auto z = center(*G);
  CHECK(z.size() == 2);
  const auto& S = *G->group.space();
  for (auto i : z) {
    const Matrix& m = G->group.element(i);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(0, 0) == m.at(1, 1));
  }
  CHECK(std::count(z.begin(), z.end(), G->group.index_of(S.scalar(2))) == 1);

  auto S5 = space(5, 1, 2);
  auto T = classify(FiniteGroup::generate(S5, {S5->identity()}));
  CHECK(center(*T) == std::vector<std::size_t>{T->group.identity()});
}

TEST_CASE("subgroup") {
  auto G = full_gl(2, 2);
  auto B = subgroup(G, [](const Matrix& m) { return m.at(1, 0) == 0; });
  CHECK(B.sub->order() == 2);
  for (std::size_t i = 0; i < B.sub->order(); ++i)
    CHECK(G->group.element(B.embedding[i]) == B.sub->group.element(i));

  auto whole = subgroup(G, [](const Matrix&) { return true; });
  CHECK(whole.sub->order() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(whole.embedding[i] == i);

  auto S = space(2, 1, 3);
  auto G3 = classify(FiniteGroup::generate(S, oracle::all_invertible(*S)));
  CHECK(G3->order() == 168);
  auto U = subgroup(G3, [](const Matrix& m) {
    return m.at(0, 0) == 1 && m.at(1, 1) == 1 && m.at(2, 2) == 1 && m.at(1, 0) == 0 && m.at(2, 0) == 0 &&
           m.at(2, 1) == 0;
  });
  CHECK(U.sub->order() == 8);

  // {I, one transposition, another transposition} is not closed
  CHECK_THROWS_AS(subgroup(G, [](const Matrix& m) { return m.at(0, 0) == 1 || m.at(1, 1) == 1; }), GroupError);
  CHECK_THROWS_AS(subgroup(G, std::vector<std::size_t>{}), GroupError);
}

TEST_CASE("class_fusion") {
  auto G = full_gl(2, 2);
  auto whole = subgroup(G, [](const Matrix&) { return true; });
  for (std::size_t c = 0; c < whole.fusion.size(); ++c) CHECK(whole.fusion[c] == c);

  const auto& S = *G->group.space();
  const std::size_t r = G->group.index_of(S.from_rows({{0, 1}, {1, 1}}));
  CHECK(G->group.element_order(r) == 3);
  auto C3 = subgroup(G, std::vector<std::size_t>{G->group.identity(), r, G->group.mul(r, r)});
  CHECK(C3.sub->num_classes() == 3);
  CHECK(C3.fusion[0] == 0);
  std::set<std::size_t> images;
  for (std::size_t c = 1; c < 3; ++c) images.insert(C3.fusion[c]);
  CHECK(images.size() == 1);
  CHECK(G->classes.rep_orders[*images.begin()] == 3);
}

TEST_CASE("is_normal") {
  auto S = space(3, 1, 2);
  auto G = classify(FiniteGroup::generate(S, oracle::all_invertible(*S)));
  auto B = subgroup(G, [](const Matrix& m) { return m.at(1, 0) == 0; });
  CHECK(B.sub->order() == 12);
  auto N_in_B = subgroup(B.sub, [](const Matrix& m) { return m.at(0, 0) == 1 && m.at(1, 1) == 1; });
  CHECK(N_in_B.sub->order() == 3);
  CHECK(is_normal(N_in_B));
  auto T_in_B = subgroup(B.sub, [](const Matrix& m) { return m.at(0, 1) == 0; });
  CHECK(!is_normal(T_in_B));
  auto N_in_G = compose(N_in_B, B);
  CHECK(N_in_G.parent.get() == G.get());
  for (std::size_t i = 0; i < N_in_G.embedding.size(); ++i)
    CHECK(G->group.element(N_in_G.embedding[i]) == N_in_B.sub->group.element(i));
}

TEST_CASE("matrix encoding is injective and round-trips") {
  auto S = space(3, 2, 2);
  std::set<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < 6561; c += 7) {
    const Matrix m = S->decode(c);
    CHECK(S->encode(m) == c);
    CHECK(seen.insert(S->encode(m)).second);
  }
}
