#pragma once

// Finite general linear and unitary groups with their split BN-pair data:
// torus, Borel, unipotent radical, standard parabolics indexed by twist-stable
// subsets of simple roots, plus the operators built on top of them (duality,
// Gelfand-Graev characters, regular and semisimple characters, and the
// central element attached to an element of the torus negating every simple
// root coordinate).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lietab/chartab.hpp"
#include "lietab/classfun.hpp"
#include "lietab/field.hpp"
#include "lietab/group.hpp"

namespace lietab {

class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { GL, U };

std::string family_name(Family f);  // "GL" or "U"
Family parse_family(const std::string& s);

// Closed-form group orders; throws on overflow.
std::uint64_t gl_order(int n, std::uint64_t q);
std::uint64_t u_order(int n, std::uint64_t q);
std::uint64_t lie_order(Family f, int n, std::uint64_t q);

// A twist-stable subset of the simple roots {1, ..., n-1}, bit i-1 for root i.
struct RootSubset {
  unsigned mask = 0;
  int orbits = 0;  // |J / rho|
  bool operator==(const RootSubset&) const = default;
};

struct Parabolic {
  RootSubset J;
  Subgroup P;       // P_J <= G
  Subgroup N_in_P;  // N_J <= P_J
  Subgroup N;       // N_J <= G
};

class LieGroupData {
 public:
  Family family() const { return family_; }
  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  // Field of the matrix entries: F_q for GL, F_{q^2} for U.
  const FieldPtr& field() const { return field_; }
  const SpacePtr& space() const { return space_; }
  const GroupPtr& G() const { return G_; }
  std::string name() const;

  const std::vector<int>& simple_roots() const { return roots_; }
  int rho(int i) const { return rho_.at(static_cast<std::size_t>(i)); }
  // rho-orbits on the simple roots, each sorted; orbit representative first.
  const std::vector<std::vector<int>>& root_orbits() const { return orbits_; }

  const Subgroup& T0() const { return T0_; }
  const Subgroup& B0() const { return B0_; }
  const Subgroup& N0() const { return N0_; }

  // The Frobenius endomorphism whose fixed points are G.
  Matrix frobenius(const Matrix& g) const;

  const std::vector<RootSubset>& stable_subsets() const { return subsets_; }
  const Parabolic& parabolic(unsigned mask) const;

  // Simple-root coordinate kappa_i(h) = h_{i,i+1} of an element of N0.
  Code root_coordinate(const Matrix& h, int i) const { return h.at(i - 1, i); }

 private:
  friend LieGroupData build_lie(Family, int, std::uint32_t, std::size_t);

  Family family_ = Family::GL;
  int n_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t q_exp_ = 0;  // q = p^q_exp_
  FieldPtr field_;
  SpacePtr space_;
  GroupPtr G_;
  std::vector<int> roots_;
  std::vector<int> rho_;  // indexed by root, rho_[0] unused
  std::vector<std::vector<int>> orbits_;
  Subgroup T0_, B0_, N0_;
  std::vector<RootSubset> subsets_;
  std::map<unsigned, Parabolic> parabolics_;
};

LieGroupData build_lie(Family f, int n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultCap);
LieGroupData build_gl(int n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultCap);
LieGroupData build_u(int n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultCap);

std::vector<RootSubset> rho_stable_subsets(const LieGroupData& data);
const Parabolic& standard_parabolic(const LieGroupData& data, unsigned mask);

struct DualityResult {
  ClassFunction virtual_char;
  int sign = 1;
  ClassFunction normalized;
};

// chi* = sum over stable J of (-1)^{|J/rho|} (T_{P_J/N_J} chi)^G, with the sign
// making the degree positive.
DualityResult duality(const LieGroupData& data, const ClassFunction& chi);

// Linear character of N0: h -> zeta_p^{sum over orbit representatives r of
// Tr(mu_r h_{r,r+1})}.  choice selects the choice-th admissible mu per orbit.
ClassFunction nondegenerate_character(const LieGroupData& data, int choice = 0);
ClassFunction gelfand_graev(const LieGroupData& data, int choice = 0);

// Constituents of the Gelfand-Graev character; throws on multiplicity > 1.
std::vector<std::size_t> regular_characters(const LieGroupData& data, const CharacterTable& table,
                                            const ClassFunction& gamma);

struct SemisimpleSets {
  std::vector<std::size_t> by_dual_gamma;    // <Gamma*, chi> != 0
  std::vector<std::size_t> by_degree;        // p does not divide chi(1)
  std::vector<std::size_t> by_unipotent;     // regular unipotent value != 0
  bool agree() const { return by_dual_gamma == by_degree && by_dual_gamma == by_unipotent; }
};

SemisimpleSets semisimple_characters(const LieGroupData& data, const CharacterTable& table,
                                     const ClassFunction& gamma);

// Classes of p-power order with the least centralizer order.  More than one
// class can tie (U(n, q) with gcd(n, q + 1) > 1); the caller sees all of them.
std::vector<std::size_t> regular_unipotent_classes(const LieGroupData& data);
// Average of chi over the union of those classes.
Cyclotomic regular_unipotent_average(const LieGroupData& data, const ClassFunction& chi);

struct PrasadElement {
  std::size_t s = 0;  // element index in G
  std::size_t z = 0;  // s^2
  // Distinct s^2 over every admissible s in T0, sorted by element index.
  std::vector<std::size_t> all_z;
  std::size_t candidates = 0;
};

// Searches T0 for s with (s h s^-1)_{i,i+1} = -h_{i,i+1} for all h in N0 and
// all simple roots i.  Prefers s whose square has the least order, then the
// smallest encoding.
PrasadElement prasad_element(const LieGroupData& data);

// Closed-form central element for U(n, q): I if n is odd or q even, -I if
// q = 1 mod 4, and t^2 I with t^(q+1) = -1 if q = 3 mod 4.
Matrix central_element_z(Family f, int n, std::uint32_t q);

}  // namespace lietab
