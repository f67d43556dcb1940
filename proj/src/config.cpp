#include "lgt/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lgt/snapshot.hpp"
#include "lgt/synth.hpp"

namespace lgt {

namespace {
std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_string(ss.str());
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config line " << lineno << ": expected key = value";
      throw ConfigError(os.str());
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream os;
      os << "config line " << lineno << ": empty key";
      throw ConfigError(os.str());
    }
    cfg.kv_[key] = value;
  }
  return cfg;
}

std::string KeyValueConfig::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string KeyValueConfig::get(const std::string& key,
                                const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

int KeyValueConfig::get_int(const std::string& key, std::optional<int> fallback) const {
  if (!has(key)) {
    if (fallback) return *fallback;
    throw ConfigError("missing config key: " + key);
  }
  try {
    size_t pos = 0;
    const int v = std::stoi(get(key), &pos);
    if (pos != get(key).size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " is not an integer: " + get(key));
  }
}

double KeyValueConfig::get_double(const std::string& key,
                                  std::optional<double> fallback) const {
  if (!has(key)) {
    if (fallback) return *fallback;
    throw ConfigError("missing config key: " + key);
  }
  try {
    size_t pos = 0;
    const double v = std::stod(get(key), &pos);
    if (pos != get(key).size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " is not a number: " + get(key));
  }
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key,
                                      std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  try {
    return std::stoull(get(key));
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " is not an integer: " + get(key));
  }
}

std::vector<int> KeyValueConfig::get_ints(const std::string& key) const {
  std::istringstream in(get(key));
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ConfigError("config key " + key + " is not an integer list");
  return out;
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key) const {
  std::istringstream in(get(key));
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ConfigError("config key " + key + " is not a number list");
  return out;
}

LatticeChart chart_from_config(const KeyValueConfig& cfg) {
  try {
    const auto sizes = cfg.get_ints("chart.sizes");
    const int dim = cfg.get_int("chart.dim", static_cast<int>(sizes.size()));
    if (dim != static_cast<int>(sizes.size()))
      throw ConfigError("chart.dim does not match chart.sizes");
    std::vector<double> spacings(dim, 1.0);
    if (cfg.has("chart.spacings")) {
      spacings = cfg.get_doubles("chart.spacings");
      if (static_cast<int>(spacings.size()) == 1) spacings.assign(dim, spacings[0]);
    }
    const Boundary b = boundary_from_string(cfg.get("chart.boundary", "periodic"));
    MetricSignature sig = cfg.has("chart.signature")
                              ? MetricSignature::parse(cfg.get("chart.signature"))
                              : MetricSignature::euclidean(dim);
    if (static_cast<int>(sig.diag.size()) != dim)
      throw ConfigError("chart.signature length does not match chart.dim");
    return LatticeChart(sizes, spacings, b, sig);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid chart: ") + e.what());
  }
}

TheorySpec theory_from_config(const KeyValueConfig& cfg, LatticeChart chart) {
  const std::string kind = cfg.get("theory", "maxwell");
  try {
    if (kind == "maxwell") return TheorySpec::maxwell(std::move(chart));
    if (kind == "kform" || kind == "kform_em")
      return TheorySpec::kform_em(std::move(chart), cfg.get_int("kform.degree", 1));
    if (kind == "yang_mills" || kind == "ym")
      return TheorySpec::yang_mills(std::move(chart));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid theory: ") + e.what());
  }
  throw ConfigError("unknown theory kind: " + kind);
}

FormField initial_field_from_config(const KeyValueConfig& cfg, const TheorySpec& T,
                                    std::mt19937_64& rng,
                                    std::vector<std::string>* notes) {
  const std::string kind = cfg.get("init", "zero");
  if (kind == "zero")
    return FormField(T.chart, T.algebra(), T.potential_degree);
  if (kind == "plane-wave") {
    const auto modes = cfg.get_ints("init.modes");
    if (static_cast<int>(modes.size()) != T.chart.dim())
      throw ConfigError("init.modes length must match chart dimension");
    const int axis = cfg.get_int("init.axis", 1);
    const double amp = cfg.get_double("init.amplitude", 1.0);
    if (T.potential_degree != 1 || T.algebra().kind() != AlgebraKind::u1)
      throw ConfigError("plane-wave init needs an Abelian 1-form potential");
    const auto adm = plane_wave_admissibility(T.chart, modes, axis);
    if (notes) {
      std::ostringstream os;
      os << "plane wave: k.k = " << format_double(adm.k_dot_k)
         << ", k.polarization = " << format_double(adm.k_dot_polarization);
      notes->push_back(os.str());
    }
    return plane_wave_potential(T.chart, modes, axis, amp);
  }
  if (kind == "random") {
    const double amp = cfg.get_double("init.amplitude", 0.1);
    const int n_modes = cfg.get_int("init.random.modes", 3);
    const int cutoff = cfg.get_int("init.random.cutoff", 2);
    return WaveFormSpec::random(rng, T.chart, T.potential_degree,
                                T.algebra().kind(), n_modes, amp, cutoff)
        .sample(T.chart);
  }
  if (kind == "file") {
    FormField f = read_snapshot(cfg.get("init.file"));
    if (!(f.chart() == T.chart) || f.degree() != T.potential_degree ||
        f.algebra().kind() != T.algebra().kind())
      throw ConfigError("init.file snapshot does not match the scenario chart/theory");
    return f;
  }
  throw ConfigError("unknown init kind: " + kind);
}

FlowParams flow_params_from_config(const KeyValueConfig& cfg, std::uint64_t seed) {
  FlowParams p;
  p.step = cfg.get_double("flow.step", 0.0);
  p.max_iters = cfg.get_int("flow.max_iters", 50000);
  p.residual_tol = cfg.get_double("flow.tol", 1e-6);
  p.gauge_penalty = cfg.get_double("flow.gauge_penalty", 0.0);
  p.seed = seed;
  if (p.max_iters < 0) throw ConfigError("flow.max_iters must be nonnegative");
  if (!(p.residual_tol > 0)) throw ConfigError("flow.tol must be positive");
  if (p.gauge_penalty < 0) throw ConfigError("flow.gauge_penalty must be nonnegative");
  return p;
}

}  // namespace lgt
