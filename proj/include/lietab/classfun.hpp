#pragma once

// Class functions and the operators acting on them: inner products,
// restriction, induction, truncation along a normal subgroup, Frobenius-Schur
// indicators and central characters.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lietab/cyclo.hpp"
#include "lietab/group.hpp"

namespace lietab {

class ClassFunctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction zero(const GroupPtr& g);
  static ClassFunction trivial(const GroupPtr& g);
  static ClassFunction regular(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_.at(c); }
  std::size_t size() const { return values_.size(); }
  // Value at the identity class.
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator-() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction scaled(const Cyclotomic& s) const;
  ClassFunction conjugate() const;

  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  int compare(const ClassFunction& o) const;

 private:
  void require_same_group(const ClassFunction& o) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

// (1/|G|) sum_g phi(g) conj(psi(g))
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);
// Integer inner product of two virtual characters; throws if not integral.
long long int_inner_product(const ClassFunction& phi, const ClassFunction& psi);

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h);
// psi^G(g) = |C_G(g)| sum over H-classes c fusing to the class of g of psi(c)/|C_H(c)|
ClassFunction induce(const ClassFunction& psi, const Subgroup& h);

// Truncation T_{P/N}: h -> (1/|N|) sum_{x in N} chi(x h).  p is a subgroup of
// the group of chi, n a subgroup of p.
ClassFunction truncate(const ClassFunction& chi, const Subgroup& p, const Subgroup& n);

// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2).  When the input is
// declared irreducible the result is checked to be -1, 0 or 1.
Cyclotomic fs_indicator(const ClassFunction& chi, bool irreducible = false);
int fs_indicator_irreducible(const ClassFunction& chi);

// omega_chi(z) = chi(z)/chi(1) for a central element z (element index).
Cyclotomic central_character(const ClassFunction& chi, std::size_t z);

bool is_real_valued(const ClassFunction& chi);

struct CharacterTable;

// Multiplicities <phi, chi_i>; throws if any is not a rational integer.
std::vector<long long> decompose(const ClassFunction& phi, const CharacterTable& table);
ClassFunction recombine(const std::vector<long long>& mult, const CharacterTable& table);

// Restriction to P followed by projection onto the irreducible constituents
// of P whose kernel contains N.
ClassFunction project_n_trivial(const ClassFunction& chi, const Subgroup& p, const Subgroup& n,
                                const CharacterTable& p_table);

struct RealBlock {
  enum class Kind { orthogonal, symplectic, complex_pair } kind;
  std::size_t index;        // constituent
  std::size_t partner;      // conjugate constituent for complex pairs, else index
  long long multiplicity;   // copies of the real block
};

struct RealCertificate {
  bool certified = false;
  std::vector<RealBlock> blocks;
  std::optional<std::size_t> witness;  // offending constituent on failure
  std::string reason;
};

// Writes phi as a non-negative integer combination of theta (indicator 1),
// 2 psi (indicator -1) and eta + conj(eta) (indicator 0), or reports why not.
RealCertificate real_basis_decomposition(const ClassFunction& phi, const CharacterTable& table);

}  // namespace lietab
