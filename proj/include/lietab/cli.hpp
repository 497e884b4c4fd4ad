#pragma once

// Batch front end: build | chartab | verify | report.
// Exit codes: 0 success, 1 verification or integrity failure, 2 usage error.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lietab/lie.hpp"
#include "lietab/verify.hpp"

namespace lietab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct JobConfig {
  std::string command;
  Family family = Family::GL;
  int n = 0;
  std::uint32_t q = 0;
  std::uint64_t seed = 1;
  std::filesystem::path cache_dir;
  std::string format;  // json | md | csv; empty means the command default
  Theorem theorem = Theorem::all;
  bool allow_large = false;
};

struct RosterEntry {
  Family family;
  int n;
  std::uint32_t q;
};

const std::vector<RosterEntry>& roster();
bool in_roster(Family f, int n, std::uint32_t q);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lietab
