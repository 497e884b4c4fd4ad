#include "lietab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lietab/cache.hpp"
#include "lietab/report.hpp"

namespace lietab {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<RosterEntry>& roster() {
  static const std::vector<RosterEntry> r{
      {Family::GL, 2, 2}, {Family::GL, 2, 3}, {Family::GL, 3, 2}, {Family::GL, 2, 5},
      {Family::U, 2, 2},  {Family::U, 2, 3},  {Family::U, 2, 5},  {Family::U, 3, 2},
  };
  return r;
}

bool in_roster(Family f, int n, std::uint32_t q) {
  for (const auto& e : roster())
    if (e.family == f && e.n == n && e.q == q) return true;
  return false;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A failed verification whose details have already been printed.
class ReportedFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string build_command(const JobConfig& c) {
  std::ostringstream os;
  os << "lietab build --family " << lower(family_name(c.family)) << " --n " << c.n << " --q " << c.q
     << " --cache-dir " << c.cache_dir.string();
  if (c.allow_large) os << " --allow-large";
  return os.str();
}

std::string verify_command(const JobConfig& c) {
  std::ostringstream os;
  os << "lietab verify --family " << lower(family_name(c.family)) << " --n " << c.n << " --q " << c.q << " --seed "
     << c.seed << " --theorem " << theorem_name(c.theorem) << " --cache-dir " << c.cache_dir.string();
  if (c.allow_large) os << " --allow-large";
  return os.str();
}

class Job {
 public:
  Job(JobConfig cfg, std::ostream& out, std::ostream& err)
      : cfg_(std::move(cfg)), cache_(cfg_.cache_dir), out_(out), err_(err) {}

  int run() {
    if (cfg_.command == "build") return cmd_build();
    if (cfg_.command == "chartab") return cmd_chartab();
    if (cfg_.command == "verify") return cmd_verify();
    if (cfg_.command == "report") return cmd_report();
    throw UsageError("unknown command " + cfg_.command);
  }

 private:
  const LieGroupData& group(bool announce) {
    if (data_) return *data_;
    data_ = build_lie(cfg_.family, cfg_.n, cfg_.q, FiniteGroup::kDefaultCap);
    const GroupKey key = GroupKey::of(*data_);
    const json payload = group_payload(*data_);
    const std::string hash = payload_checksum(payload);
    const fs::path path = cache_.group_path(key);
    std::string status = "built";
    if (fs::exists(path)) {
      const json cached = open_envelope(read_json(path), kGroupSchema);
      if (cached != payload)
        throw IntegrityError("group artifact " + path.string() + " does not match a fresh build of " +
                             data_->name() + "; remove it and rerun: " + build_command(cfg_));
      status = "cache hit";
    } else {
      write_atomic(path, make_envelope(kGroupSchema, payload).dump(2) + "\n");
    }
    if (announce)
      out_ << data_->name() << " |G|=" << data_->G()->order() << " classes=" << data_->G()->num_classes()
           << " hash=" << hash << " " << status << "\n";
    return *data_;
  }

  const CharacterTable& table(bool announce) {
    if (table_) return *table_;
    const LieGroupData& d = group(false);
    const fs::path path = cache_.table_path(GroupKey::of(d), cfg_.seed);
    std::string status = "computed";
    if (fs::exists(path)) {
      table_ = table_from_payload(d, open_envelope(read_json(path), kTableSchema));
      status = "cache hit";
    } else {
      table_ = dixon_table(d.G(), {.seed = cfg_.seed});
    }
    const OrthogonalityReport orth = orthogonality_check(*table_);
    if (!orth.pass) {
      const auto& v = orth.violations.front();
      std::ostringstream os;
      os << "character table of " << d.name() << " (" << status << ", " << path.string()
         << ") fails orthogonality: " << orth.violations.size() << " violation(s); first at character " << v.a;
      if (v.b != v.a) os << " / " << v.b;
      os << ": " << v.detail;
      throw IntegrityError(os.str());
    }
    if (status == "computed") write_atomic(path, make_envelope(kTableSchema, table_payload(d, *table_)).dump(2) + "\n");
    if (announce) {
      long long sum = 0;
      for (auto deg : table_->degrees) sum += deg * deg;
      out_ << d.name() << " table " << table_->size() << "x" << table_->size() << " sum_deg2=" << sum
           << " orthogonality=pass seed=" << cfg_.seed << " " << status << "\n";
    }
    return *table_;
  }

  void emit(const VerificationReport& rep, const std::string& fallback) {
    const std::string fmt = cfg_.format.empty() ? fallback : cfg_.format;
    if (fmt == "json")
      out_ << render_json(rep, cfg_.seed);
    else if (fmt == "md")
      out_ << render_markdown(rep);
    else
      out_ << render_csv(rep);
  }

  int cmd_build() {
    group(true);
    return kExitOk;
  }

  int cmd_chartab() {
    table(true);
    return kExitOk;
  }

  int cmd_verify() {
    if (cfg_.theorem == Theorem::unitary && cfg_.family != Family::U)
      throw UsageError("--theorem unitary applies to the unitary family only");
    const LieGroupData& d = group(false);
    const VerificationReport rep = verify_theorems(d, table(false), cfg_.theorem);
    const json payload = report_to_json(rep, cfg_.seed);
    write_atomic(cache_.verify_path(GroupKey::of(d), cfg_.seed, cfg_.theorem),
                 make_envelope(kVerifySchema, payload).dump(2) + "\n");
    emit(rep, "json");
    if (rep.pass()) return kExitOk;
    for (const auto& c : rep.checks)
      if (!c.pass) err_ << "FAIL " << c.name << " (" << c.theorem << "): " << c.detail << "\n";
    return kExitFailure;
  }

  int cmd_report() {
    const GroupKey key = GroupKey::make(cfg_.family, cfg_.n, cfg_.q);
    const fs::path path = cache_.verify_path(key, cfg_.seed, cfg_.theorem);
    if (!fs::exists(path)) {
      std::ostringstream os;
      os << "no verification report for " << key.name() << " (seed " << cfg_.seed << ", theorem "
         << theorem_name(cfg_.theorem) << ") in " << cfg_.cache_dir.string() << "\n"
         << "create it with:\n  " << build_command(cfg_) << "\n  " << verify_command(cfg_);
      throw IntegrityError(os.str());
    }
    const VerificationReport rep = report_from_json(open_envelope(read_json(path), kVerifySchema));
    emit(rep, "md");
    return rep.pass() ? kExitOk : kExitFailure;
  }

  JobConfig cfg_;
  Cache cache_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<LieGroupData> data_;
  std::optional<CharacterTable> table_;
};

fs::path default_cache_dir() {
  if (const char* env = std::getenv("LIETAB_CACHE_DIR"); env && *env) return env;
  return ".lietab-cache";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character tables and duality checks for GL(n,q) and U(n,q)", "lietab"};
  app.require_subcommand(1, 1);

  JobConfig cfg;
  std::string family, format, theorem = "all", cache_dir;
  std::uint64_t q = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "gl or u")->required()->check(CLI::IsMember({"gl", "u", "GL", "U"}));
    sub->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1, kMaxDim));
    sub->add_option("--q", q, "field order (prime power)")->required();
    sub->add_option("--seed", cfg.seed, "seed for the table computation")->capture_default_str();
    sub->add_option("--cache-dir", cache_dir, "artifact directory (default $LIETAB_CACHE_DIR or .lietab-cache)");
    sub->add_option("--format", format, "json, md or csv")->check(CLI::IsMember({"json", "md", "csv"}));
    sub->add_flag("--allow-large", cfg.allow_large, "accept groups outside the roster up to 10^6 elements");
  };
  add_common(app.add_subcommand("build", "build the group and cache its fingerprint"));
  add_common(app.add_subcommand("chartab", "compute or load the character table"));
  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  add_common(verify);
  auto* report = app.add_subcommand("report", "render cached verification results");
  add_common(report);
  for (auto* sub : {verify, report})
    sub->add_option("--theorem", theorem, "fs-dual, central-dual, fs-central, unitary or all")
        ->check(CLI::IsMember({"fs-dual", "central-dual", "fs-central", "unitary", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'lietab --help' for usage\n";
    return kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.family = parse_family(family);
    cfg.theorem = parse_theorem(theorem);
    cfg.format = format;
    cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : fs::path(cache_dir);
    if (q < 2 || q > 0xffffffffULL) throw UsageError("--q must be a prime power");
    try {
      prime_power_parts(q);
    } catch (const FieldError&) {
      throw UsageError("--q " + std::to_string(q) + " is not a prime power");
    }
    cfg.q = static_cast<std::uint32_t>(q);
    const std::string name = family_name(cfg.family) + "(" + std::to_string(cfg.n) + "," + std::to_string(cfg.q) + ")";
    if (!in_roster(cfg.family, cfg.n, cfg.q) && !cfg.allow_large)
      throw UsageError(name + " is not in the supported roster; pass --allow-large to build it anyway");
    std::uint64_t order = 0;
    try {
      order = lie_order(cfg.family, cfg.n, cfg.q);
    } catch (const LieError&) {
      order = ~std::uint64_t{0};
    }
    if (order > FiniteGroup::kDefaultCap)
      throw UsageError(name + " has more than " + std::to_string(FiniteGroup::kDefaultCap) + " elements");
    return Job(cfg, out, err).run();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace lietab
