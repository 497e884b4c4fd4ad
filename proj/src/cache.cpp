#include "lietab/cache.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace lietab {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

std::string payload_checksum(const json& payload) { return "fnv1a64:" + hex64(fnv1a64(payload.dump())); }

json make_envelope(const std::string& schema, json payload) {
  json env;
  env["schema"] = schema;
  env["engine"] = kEngineVersion;
  env["checksum"] = payload_checksum(payload);
  env["payload"] = std::move(payload);
  return env;
}

json open_envelope(const json& envelope, const std::string& schema) {
  if (!envelope.is_object() || !envelope.contains("payload") || !envelope.contains("checksum"))
    throw IntegrityError("artifact is not a " + schema + " envelope");
  if (envelope.value("schema", "") != schema)
    throw IntegrityError("schema mismatch: expected " + schema + ", found " + envelope.value("schema", "?"));
  if (envelope.value("engine", "") != kEngineVersion)
    throw IntegrityError("artifact written by engine " + envelope.value("engine", "?") + ", this is " +
                         kEngineVersion);
  const std::string want = envelope["checksum"].get<std::string>();
  const std::string got = payload_checksum(envelope["payload"]);
  if (want != got) throw IntegrityError("checksum mismatch: recorded " + want + ", computed " + got);
  return envelope["payload"];
}

void write_atomic(const fs::path& path, const std::string& contents) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IntegrityError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

json cyclotomic_to_json(const Cyclotomic& c) {
  const Cyclotomic m = c.minimized();
  json coeffs = json::array();
  for (const auto& r : m.coeffs()) coeffs.push_back(r.get_str());
  return {{"order", m.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) {
    Rational r;
    if (r.set_str(s.get<std::string>(), 10) != 0) throw IntegrityError("bad rational " + s.dump());
    r.canonicalize();
    coeffs.push_back(r);
  }
  if (order < 1 || coeffs.size() != static_cast<std::size_t>(euler_phi(order)))
    throw IntegrityError("cyclotomic of order " + std::to_string(order) + " has the wrong coefficient count");
  return Cyclotomic(order, std::move(coeffs));
}

namespace {

json matrix_json(const MatrixSpace& S, const Matrix& m) { return S.to_rows(m); }

json field_json(const PrimePowerField& F) {
  return {{"p", F.characteristic()}, {"k", F.degree()}, {"modulus", F.modulus()}};
}

}  // namespace

json group_payload(const LieGroupData& d) {
  const auto& G = *d.G();
  const auto& S = *d.space();
  json classes = json::array();
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    classes.push_back({{"rep", matrix_json(S, G.group.element(G.classes.reps[c]))},
                       {"size", G.classes.sizes[c]},
                       {"centralizer", G.classes.centralizer_orders[c]},
                       {"element_order", G.classes.rep_orders[c]}});
  json gens = json::array();
  for (const Matrix& m : G.group.generator_matrices()) gens.push_back(matrix_json(S, m));
  std::string codes;
  for (auto c : G.group.codes()) codes += std::to_string(c) + ",";
  return {{"family", family_name(d.family())},
          {"n", d.n()},
          {"q", d.q()},
          {"field", field_json(*d.field())},
          {"order", G.order()},
          {"num_classes", G.num_classes()},
          {"generators", gens},
          {"classes", classes},
          {"elements_hash", hex64(fnv1a64(codes))}};
}

json table_payload(const LieGroupData& d, const CharacterTable& t) {
  json irr = json::array();
  for (const auto& chi : t.irreducibles) {
    json row = json::array();
    for (const auto& v : chi.values()) row.push_back(cyclotomic_to_json(v));
    irr.push_back(row);
  }
  return {{"group", payload_checksum(group_payload(d))},
          {"exponent", t.exponent},
          {"prime", t.prime},
          {"seed", t.seed},
          {"degrees", t.degrees},
          {"irreducibles", irr}};
}

CharacterTable table_from_payload(const LieGroupData& d, const json& p) {
  if (p.at("group").get<std::string>() != payload_checksum(group_payload(d)))
    throw IntegrityError("table was computed for a different group than " + d.name());
  const std::size_t k = d.G()->num_classes();
  CharacterTable t;
  t.group = d.G();
  t.exponent = p.at("exponent").get<std::uint64_t>();
  t.prime = p.at("prime").get<std::uint64_t>();
  t.seed = p.at("seed").get<std::uint64_t>();
  t.degrees = p.at("degrees").get<std::vector<long long>>();
  const auto& irr = p.at("irreducibles");
  if (irr.size() != k || t.degrees.size() != k)
    throw IntegrityError("table has " + std::to_string(irr.size()) + " rows, group has " + std::to_string(k) +
                         " classes");
  for (const auto& row : irr) {
    if (row.size() != k) throw IntegrityError("table row has the wrong length");
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    t.irreducibles.emplace_back(d.G(), std::move(values));
  }
  return t;
}

json report_to_json(const VerificationReport& r, std::uint64_t seed) {
  json chars = json::array();
  for (const auto& c : r.characters)
    chars.push_back({{"index", c.index},
                     {"degree", c.degree},
                     {"fs", c.fs},
                     {"omega_z", cyclotomic_to_json(c.omega_z)},
                     {"omega_z_text", c.omega_z.minimized().to_string()},
                     {"regular", c.regular},
                     {"semisimple", c.semisimple},
                     {"real", c.real},
                     {"dual", c.dual},
                     {"dual_sign", c.dual_sign}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"theorem", c.theorem},
                      {"pass", c.pass},
                      {"witnesses", c.witnesses},
                      {"detail", c.detail}});
  return {{"group",
           {{"family", r.family},
            {"n", r.n},
            {"q", r.q},
            {"order", r.order},
            {"num_classes", r.num_classes},
            {"z", r.z},
            {"s", r.s}}},
          {"seed", seed},
          {"characters", chars},
          {"checks", checks},
          {"pass", r.pass()}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  const auto& g = j.at("group");
  r.family = g.at("family").get<std::string>();
  r.n = g.at("n").get<int>();
  r.q = g.at("q").get<std::uint32_t>();
  r.order = g.at("order").get<std::uint64_t>();
  r.num_classes = g.at("num_classes").get<std::size_t>();
  r.z = g.at("z").get<std::vector<std::vector<std::string>>>();
  r.s = g.at("s").get<std::vector<std::vector<std::string>>>();
  for (const auto& c : j.at("characters")) {
    CharacterRecord rec;
    rec.index = c.at("index").get<std::size_t>();
    rec.degree = c.at("degree").get<long long>();
    rec.fs = c.at("fs").get<int>();
    rec.omega_z = cyclotomic_from_json(c.at("omega_z"));
    rec.regular = c.at("regular").get<bool>();
    rec.semisimple = c.at("semisimple").get<bool>();
    rec.real = c.at("real").get<bool>();
    rec.dual = c.at("dual").get<std::size_t>();
    rec.dual_sign = c.at("dual_sign").get<int>();
    r.characters.push_back(std::move(rec));
  }
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("theorem").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("witnesses").get<std::vector<std::size_t>>(), c.at("detail").get<std::string>()});
  return r;
}

GroupKey GroupKey::of(const LieGroupData& d) { return {d.family(), d.n(), d.q(), d.field()->modulus()}; }

GroupKey GroupKey::make(Family f, int n, std::uint32_t q) {
  const auto [p, k] = prime_power_parts(q);
  return {f, n, q, PrimePowerField::make(p, f == Family::GL ? k : 2 * k)->modulus()};
}

std::string GroupKey::name() const {
  return family_name(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

std::string Cache::stem(const GroupKey& g, std::optional<std::uint64_t> seed) {
  std::ostringstream key;
  key << family_name(g.family) << '|' << g.n << '|' << g.q << '|';
  for (auto c : g.modulus) key << c << ',';
  key << '|' << (seed ? std::to_string(*seed) : "-") << '|' << kEngineVersion;
  std::ostringstream name;
  name << family_name(g.family) << '-' << g.n << '-' << g.q;
  if (seed) name << "-s" << *seed;
  name << '-' << hex64(fnv1a64(key.str())).substr(0, 12);
  return name.str();
}

fs::path Cache::group_path(const GroupKey& g) const { return dir_ / (stem(g, std::nullopt) + ".group.json"); }

fs::path Cache::table_path(const GroupKey& g, std::uint64_t seed) const {
  return dir_ / (stem(g, seed) + ".table.json");
}

fs::path Cache::verify_path(const GroupKey& g, std::uint64_t seed, Theorem t) const {
  return dir_ / (stem(g, seed) + "." + theorem_name(t) + ".verify.json");
}

}  // namespace lietab
