#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgt/report.hpp"
#include "lgt/theory.hpp"

namespace lgt {

/// Reference charts. Wave charts keep the physical box (12,12,12,6) at every
/// size so a single analytic field serves all refinement levels; the unequal
/// time spacing keeps the lattice dispersion of a null wave from cancelling
/// between the two active axes.
LatticeChart wave_chart(int n = 12);        // 4d Lorentzian periodic n^4
LatticeChart solver_chart(int n = 8, double spacing = 1.0);  // 3d Euclidean periodic
LatticeChart covariance_chart(int n);       // 3d Euclidean periodic n^3, box 12^3
LatticeChart calculus_chart();              // 4d Lorentzian periodic 6^4
LatticeChart clamped_chart_2d(int n = 17);  // 2d Euclidean clamped, box 8^2
LatticeChart clamped_chart_3d(int n = 9);   // 3d Euclidean clamped, box 8^3

/// Null plane-wave scenario on wave_chart(n): modes (2,0,0,1), polarization
/// along axis 1, so k = (2 pi / 6)(1,0,0,1) with k.k = 0 and k.eps = 0.
FormField wave_potential(const LatticeChart& chart, double amplitude = 1.0);

struct SweepRow {
  int level = 0;
  double h = 0.0;  // leading spacing at this level
  double value = 0.0;
};

struct SweepResult {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
  std::vector<double> ratios() const;  // value[l] / value[l+1]
  std::string to_csv() const;          // level,h,linf,ratio
};

/// Named refinement sweeps (see sweep_names for the registry).
SweepResult run_sweep(const std::string& name, int levels, std::uint64_t seed);
std::vector<std::string> sweep_names();

/// Named invariant suites: calculus, gauge, utiyama, equivalence, noether,
/// bianchi.
ResidualReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<std::string> suite_names();

ResidualReport suite_calculus(std::uint64_t seed, int n_random = 50);
ResidualReport suite_gauge(std::uint64_t seed);
ResidualReport suite_utiyama(std::uint64_t seed);
ResidualReport suite_equivalence(std::uint64_t seed);
ResidualReport suite_noether(std::uint64_t seed);
ResidualReport suite_bianchi(std::uint64_t seed);

}  // namespace lgt
