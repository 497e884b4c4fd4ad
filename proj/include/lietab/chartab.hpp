#pragma once

// Irreducible character tables by the Dixon-Schneider method: the class
// algebra structure constants are reduced modulo a prime P = 1 (mod e), their
// common eigenvectors are split over F_P, and each character value is lifted
// back to Z[zeta_e] from its eigenvalue multiplicities.

#include <cstdint>
#include <string>
#include <vector>

#include "lietab/classfun.hpp"
#include "lietab/group.hpp"

namespace lietab {

class CharacterTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a[j][k] = #{(x, y) in C_i x C_j : x y = z_k} for the class representative z_k.
struct ClassAlgebraMatrix {
  std::size_t i = 0;
  std::vector<std::vector<std::uint64_t>> entries;
};

ClassAlgebraMatrix structure_constants(const ClassedGroup& g, std::size_t i);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<long long> degrees;
  std::uint64_t exponent = 1;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;

  std::size_t size() const { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles.at(i); }
  // Index of the irreducible equal to chi, or throws.
  std::size_t index_of(const ClassFunction& chi) const;
  std::size_t conjugate_index(std::size_t i) const;
};

struct DixonOptions {
  std::uint64_t seed = 1;
  // Rounds of random class-matrix combinations before the deterministic
  // sweep over single class matrices.
  int random_rounds = 8;
};

CharacterTable dixon_table(const GroupPtr& g, const DixonOptions& opts = {});

// Smallest prime P = 1 (mod e) with P > 2 ceil(sqrt(order)).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

struct OrthogonalityViolation {
  enum class Kind { row, column, degree } kind;
  std::size_t a;
  std::size_t b;
  std::string detail;
};

struct OrthogonalityReport {
  bool pass = true;
  std::vector<OrthogonalityViolation> violations;
};

OrthogonalityReport orthogonality_check(const CharacterTable& table);

// Sorts by (degree, values) and fills the degree list.
void canonicalize(CharacterTable& table);

}  // namespace lietab
