#include "lietab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "lietab/cache.hpp"

namespace lietab {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string matrix_text(const std::vector<std::vector<std::string>>& rows) {
  std::string s = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    s += r ? "; " : "";
    for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + rows[r][c];
  }
  return s + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw std::invalid_argument("expected yes/no, got '" + s + "'");
}

}  // namespace

std::string render_json(const VerificationReport& rep, std::uint64_t seed) {
  return report_to_json(rep, seed).dump(2) + "\n";
}

std::vector<CsvRow> csv_rows(const VerificationReport& rep) {
  std::vector<CsvRow> rows;
  for (const auto& c : rep.characters)
    rows.push_back({c.index, c.degree, c.fs, c.omega_z.minimized().to_string(), c.regular, c.semisimple, c.real,
                    c.dual, c.dual_sign});
  return rows;
}

std::string render_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "index,degree,fs,omega_z,regular,semisimple,real,dual,dual_sign\n";
  for (const auto& r : csv_rows(rep))
    os << r.index << ',' << r.degree << ',' << r.fs << ',' << csv_field(r.omega_z) << ',' << yes_no(r.regular) << ','
       << yes_no(r.semisimple) << ',' << yes_no(r.real) << ',' << r.dual << ',' << r.dual_sign << '\n';
  return os.str();
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<CsvRow> rows;
  if (!std::getline(in, line) || line != "index,degree,fs,omega_z,regular,semisimple,real,dual,dual_sign")
    throw std::invalid_argument("unexpected CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw std::invalid_argument("CSV row has " + std::to_string(f.size()) + " fields");
    rows.push_back({std::stoul(f[0]), std::stoll(f[1]), std::stoi(f[2]), f[3], parse_bool(f[4]), parse_bool(f[5]),
                    parse_bool(f[6]), std::stoul(f[7]), std::stoi(f[8])});
  }
  return rows;
}

std::string render_markdown(const VerificationReport& rep) {
  std::ostringstream os;
  os << "# " << rep.family << "(" << rep.n << "," << rep.q << ")\n\n";
  os << "- order: " << rep.order << "\n";
  os << "- classes: " << rep.num_classes << "\n";
  os << "- s: " << matrix_text(rep.s) << "\n";
  os << "- z = s^2: " << matrix_text(rep.z) << "\n";
  os << "- result: " << (rep.pass() ? "PASS" : "FAIL") << "\n\n";
  os << "| index | degree | fs | omega_z | regular | semisimple | real | dual | dual_sign |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : csv_rows(rep))
    os << "| " << r.index << " | " << r.degree << " | " << r.fs << " | " << r.omega_z << " | " << yes_no(r.regular)
       << " | " << yes_no(r.semisimple) << " | " << yes_no(r.real) << " | " << r.dual << " | " << r.dual_sign
       << " |\n";
  os << "\n| check | theorem | result | detail |\n|---|---|---|---|\n";
  for (const auto& c : rep.checks)
    os << "| " << c.name << " | " << c.theorem << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail << " |\n";
  return os.str();
}

}  // namespace lietab
