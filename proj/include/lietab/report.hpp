#pragma once

// Text renderings of a verification report.  Column order is fixed:
// index, degree, fs, omega_z, regular, semisimple, real, dual, dual_sign.

#include <string>
#include <vector>

#include "lietab/verify.hpp"

namespace lietab {

std::string render_json(const VerificationReport& rep, std::uint64_t seed);
std::string render_markdown(const VerificationReport& rep);
std::string render_csv(const VerificationReport& rep);

// Inverse of render_csv for the character rows; omega_z comes back as text.
struct CsvRow {
  std::size_t index = 0;
  long long degree = 0;
  int fs = 0;
  std::string omega_z;
  bool regular = false;
  bool semisimple = false;
  bool real = false;
  std::size_t dual = 0;
  int dual_sign = 1;
  bool operator==(const CsvRow&) const = default;
};

std::vector<CsvRow> parse_csv(const std::string& text);
std::vector<CsvRow> csv_rows(const VerificationReport& rep);

}  // namespace lietab
