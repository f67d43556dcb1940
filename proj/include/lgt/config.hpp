#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgt/theory.hpp"
#include "lgt/variation.hpp"

namespace lgt {

/// Malformed scenario input; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Flat key = value text with dotted section names and # comments.
class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::string& path);
  static KeyValueConfig from_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }

  std::string get(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, std::optional<int> fallback = {}) const;
  double get_double(const std::string& key, std::optional<double> fallback = {}) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<int> get_ints(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;

 private:
  std::map<std::string, std::string> kv_;
};

/// chart.dim, chart.sizes, chart.spacings (default 1), chart.boundary
/// (default periodic), chart.signature (default all +).
LatticeChart chart_from_config(const KeyValueConfig& cfg);

/// theory = maxwell | kform | yang_mills | broken, kform.degree for kform.
TheorySpec theory_from_config(const KeyValueConfig& cfg, LatticeChart chart);

/// init = zero | plane-wave | random | file with its parameters. Plane-wave
/// admissibility (nullity of k, orthogonality to the polarization) is
/// checked and reported through `notes` without failing.
FormField initial_field_from_config(const KeyValueConfig& cfg, const TheorySpec& T,
                                    std::mt19937_64& rng,
                                    std::vector<std::string>* notes = nullptr);

FlowParams flow_params_from_config(const KeyValueConfig& cfg, std::uint64_t seed);

}  // namespace lgt
