#pragma once

// Exhaustive checks of the duality and indicator statements on one group,
// collected into a report that the CLI serializes.

#include <string>
#include <vector>

#include "lietab/lie.hpp"

namespace lietab {

enum class Theorem { fs_dual, central_dual, fs_central, unitary, all };

std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& s);

struct CharacterRecord {
  std::size_t index = 0;
  long long degree = 0;
  int fs = 0;              // Frobenius-Schur indicator
  Cyclotomic omega_z;      // central character at z
  bool regular = false;
  bool semisimple = false;
  bool real = false;
  std::size_t dual = 0;    // index of +-chi*
  int dual_sign = 1;
};

struct CheckResult {
  std::string name;
  std::string theorem;
  bool pass = true;
  std::vector<std::size_t> witnesses;  // offending character indices
  std::string detail;
};

struct VerificationReport {
  std::string family;
  int n = 0;
  std::uint32_t q = 0;
  std::uint64_t order = 0;
  std::size_t num_classes = 0;
  std::vector<std::vector<std::string>> z;  // rendered field elements
  std::vector<std::vector<std::string>> s;
  std::vector<CharacterRecord> characters;
  std::vector<CheckResult> checks;

  bool pass() const;
};

VerificationReport verify_theorems(const LieGroupData& data, const CharacterTable& table,
                                   Theorem which = Theorem::all);

}  // namespace lietab
