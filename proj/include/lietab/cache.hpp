#pragma once

// On-disk artifacts: group fingerprints, character tables and verification
// reports, each wrapped in a checksummed JSON envelope and written atomically.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lietab/chartab.hpp"
#include "lietab/lie.hpp"
#include "lietab/verify.hpp"

namespace lietab {

inline constexpr const char* kEngineVersion = "lietab-engine/1";
inline constexpr const char* kGroupSchema = "lietab.group/1";
inline constexpr const char* kTableSchema = "lietab.table/1";
inline constexpr const char* kVerifySchema = "lietab.verify/1";

// Corrupt, stale or mismatched artifact.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Checksum of the compact dump of a payload.
std::string payload_checksum(const nlohmann::json& payload);

nlohmann::json make_envelope(const std::string& schema, nlohmann::json payload);
// Checks schema, engine version and checksum; returns the payload.
nlohmann::json open_envelope(const nlohmann::json& envelope, const std::string& schema);

void write_atomic(const std::filesystem::path& path, const std::string& contents);
nlohmann::json read_json(const std::filesystem::path& path);

nlohmann::json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json group_payload(const LieGroupData& data);
nlohmann::json table_payload(const LieGroupData& data, const CharacterTable& table);
// Rebuilds the table on data.G(); throws IntegrityError if the payload does
// not belong to this group.
CharacterTable table_from_payload(const LieGroupData& data, const nlohmann::json& payload);

nlohmann::json report_to_json(const VerificationReport& rep, std::uint64_t seed);
VerificationReport report_from_json(const nlohmann::json& j);

// Identity of a group artifact: family, n, q and the field modulus.
struct GroupKey {
  Family family = Family::GL;
  int n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;

  static GroupKey of(const LieGroupData& d);
  // Same key without building the group.
  static GroupKey make(Family f, int n, std::uint32_t q);
  std::string name() const;
};

// File names keyed by family, n, q, field modulus, seed and engine version;
// the group file omits the seed.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& dir() const { return dir_; }

  static std::string stem(const GroupKey& k, std::optional<std::uint64_t> seed);
  std::filesystem::path group_path(const GroupKey& k) const;
  std::filesystem::path table_path(const GroupKey& k, std::uint64_t seed) const;
  std::filesystem::path verify_path(const GroupKey& k, std::uint64_t seed, Theorem t) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace lietab
