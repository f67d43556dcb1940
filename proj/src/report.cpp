#include "lgt/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ResidualRow& ResidualReport::add(std::string name, double l2, double linf,
                                 double tol, bool pass, std::string note) {
  rows.push_back({std::move(name), l2, linf, tol, pass, std::move(note)});
  return rows.back();
}

ResidualRow& ResidualReport::check(std::string name, double l2, double linf,
                                   double tol, std::string note) {
  return add(std::move(name), l2, linf, tol, linf <= tol, std::move(note));
}

ResidualRow& ResidualReport::info(std::string name, double l2, double linf,
                                  std::string note) {
  return add(std::move(name), l2, linf, -1.0, true, std::move(note));
}

ResidualRow& ResidualReport::check_range(std::string name, double value,
                                         double lo, double hi, std::string note) {
  const bool ok = value >= lo && value <= hi;
  std::ostringstream n;
  n << "range [" << format_double(lo) << ", " << format_double(hi) << "]";
  if (!note.empty()) n << "; " << note;
  return add(std::move(name), value, value, hi, ok, n.str());
}

bool ResidualReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
  for (auto r : other.rows) {
    if (!prefix.empty()) r.name = prefix + "." + r.name;
    rows.push_back(std::move(r));
  }
}

std::string ResidualReport::to_table() const {
  std::ostringstream os;
  os << "report = " << title << "\n";
  os << "chart = " << chart << "\n";
  if (!theory.empty()) os << "theory = " << theory << "\n";
  os << "seed = " << seed << "\n";
  for (const auto& r : rows) {
    os << r.name << ".l2 = " << format_double(r.l2) << "\n";
    os << r.name << ".linf = " << format_double(r.linf) << "\n";
    if (r.tol >= 0.0) os << r.name << ".tol = " << format_double(r.tol) << "\n";
    os << r.name << ".pass = " << (r.pass ? "true" : "false") << "\n";
    if (!r.note.empty()) os << r.name << ".note = " << r.note << "\n";
  }
  os << "all_pass = " << (all_pass() ? "true" : "false") << "\n";
  return os.str();
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string ResidualReport::to_json() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"report\": \"" << json_escape(title) << "\",\n";
  os << "  \"chart\": \"" << json_escape(chart) << "\",\n";
  if (!theory.empty()) os << "  \"theory\": \"" << json_escape(theory) << "\",\n";
  os << "  \"seed\": " << seed << ",\n";
  os << "  \"rows\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "    {\"name\": \"" << json_escape(r.name) << "\", \"l2\": " << format_double(r.l2)
       << ", \"linf\": " << format_double(r.linf);
    if (r.tol >= 0.0) os << ", \"tol\": " << format_double(r.tol);
    os << ", \"pass\": " << (r.pass ? "true" : "false");
    if (!r.note.empty()) os << ", \"note\": \"" << json_escape(r.note) << "\"";
    os << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"all_pass\": " << (all_pass() ? "true" : "false") << "\n";
  os << "}\n";
  return os.str();
}

void ResidualReport::write(const std::string& dir, const std::string& stem) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto base = fs::path(dir) / stem;
  {
    std::ofstream f(base.string() + ".txt", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write report: " + base.string() + ".txt");
    f << to_table();
  }
  {
    std::ofstream f(base.string() + ".json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write report: " + base.string() + ".json");
    f << to_json();
  }
}

}  // namespace lgt
