#include "lgt/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lgt/calculus.hpp"
#include "lgt/gauge.hpp"
#include "lgt/reconstruct.hpp"
#include "lgt/synth.hpp"
#include "lgt/variation.hpp"

namespace lgt {

LatticeChart wave_chart(int n) {
  const double s = 12.0 / n;
  return LatticeChart({n, n, n, n}, {s, s, s, 0.5 * s}, Boundary::periodic,
                      MetricSignature::lorentzian(4));
}

LatticeChart solver_chart(int n, double spacing) {
  return LatticeChart({n, n, n}, {spacing, spacing, spacing}, Boundary::periodic,
                      MetricSignature::euclidean(3));
}

LatticeChart covariance_chart(int n) {
  const double s = 12.0 / n;
  return LatticeChart({n, n, n}, {s, s, s}, Boundary::periodic,
                      MetricSignature::euclidean(3));
}

LatticeChart calculus_chart() {
  return LatticeChart({6, 6, 6, 6}, {1.0, 0.8, 1.2, 0.6}, Boundary::periodic,
                      MetricSignature::lorentzian(4));
}

LatticeChart clamped_chart_2d(int n) {
  const double s = 8.0 / (n - 1);
  return LatticeChart({n, n}, {s, s}, Boundary::clamped,
                      MetricSignature::euclidean(2));
}

LatticeChart clamped_chart_3d(int n) {
  const double s = 8.0 / (n - 1);
  return LatticeChart({n, n, n}, {s, s, s}, Boundary::clamped,
                      MetricSignature::euclidean(3));
}

FormField wave_potential(const LatticeChart& chart, double amplitude) {
  return plane_wave_potential(chart, {2, 0, 0, 1}, 1, amplitude);
}

namespace {

FormField white_noise_form(std::mt19937_64& rng, const LatticeChart& chart,
                           int degree, AlgebraKind kind, double amplitude = 1.0) {
  FormField f(chart, LieAlgebra::get(kind), degree, 0);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  for (double& v : f.raw()) v = u(rng);
  return f;
}

using LevelFn = std::function<double(int level, std::uint64_t seed)>;

struct SweepDef {
  std::string description;
  int base = 0;  // base size parameter, informational
  std::function<double(int level)> spacing;
  LevelFn value;
};

SweepResult run_levels(const std::string& name, const SweepDef& def, int levels,
                       std::uint64_t seed) {
  SweepResult out;
  out.name = name;
  out.seed = seed;
  for (int l = 0; l < levels; ++l)
    out.rows.push_back({l, def.spacing(l), def.value(l, seed)});
  return out;
}

// ---- sweep scenario builders -------------------------------------------

double maxwell_wave_value(int n) {
  const LatticeChart chart = wave_chart(n);
  FormField A = wave_potential(chart);
  FormField F = exterior_derivative(A);
  return linf_norm(maxwell_residual(F));
}

double bianchi_wave_value(int n) {
  const LatticeChart chart = wave_chart(n);
  FormField A = wave_potential(chart);
  return linf_norm(bianchi_residual(A));
}

double noether_wave_value(int n, std::uint64_t seed, int n_params) {
  const LatticeChart chart = wave_chart(n);
  const TheorySpec T = TheorySpec::maxwell(chart);
  FormField A = wave_potential(chart);
  FormField Pi = delta_l_delta_F(T, field_strength(T, A));
  // parameter specs are seeded on the fixed box, so every level sees the
  // same continuum gauge parameters
  std::mt19937_64 rng(seed);
  const LatticeChart box = wave_chart(12);
  double worst = 0.0;
  for (int i = 0; i < n_params; ++i) {
    WaveFormSpec chi =
        WaveFormSpec::random(rng, box, 0, AlgebraKind::u1, 1, 0.7, 1);
    FormField xi = exterior_derivative(chi.sample(chart));
    FormField div = vector_divergence(contract_symmetry_current(Pi, xi));
    worst = std::max(worst, linf_norm(div));
  }
  return worst;
}

struct CovarianceFields {
  FormField A;
  GroupField h;
};

CovarianceFields covariance_fields(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LatticeChart box = covariance_chart(12);
  WaveFormSpec a_spec =
      WaveFormSpec::random(rng, box, 1, AlgebraKind::su2, 3, 0.8, 1);
  WaveFormSpec x_spec =
      WaveFormSpec::random(rng, box, 0, AlgebraKind::su2, 3, 0.6, 1);
  const LatticeChart chart = covariance_chart(n);
  return {a_spec.sample(chart), group_exponential(x_spec.sample(chart))};
}

double covariance_su2_value(int n, std::uint64_t seed) {
  auto [A, h] = covariance_fields(n, seed);
  FormField lhs = curvature(gauge_transform_connection(A, h));
  FormField rhs = gauge_transform_curvature(curvature(A), h);
  return linf_distance(lhs, rhs);
}

double utiyama_su2_value(int n, std::uint64_t seed) {
  auto [A, h] = covariance_fields(n, seed);
  const TheorySpec T = TheorySpec::yang_mills(A.chart());
  return std::abs(action(T, gauge_transform_connection(A, h)) - action(T, A));
}

double bianchi_su2_value(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LatticeChart box = covariance_chart(12);
  WaveFormSpec a_spec =
      WaveFormSpec::random(rng, box, 1, AlgebraKind::su2, 3, 0.8, 1);
  return linf_norm(bianchi_residual(a_spec.sample(covariance_chart(n))));
}

struct RoundTrip {
  FormField F;
  FormField A0;
  FormField A_rec;
};

RoundTrip roundtrip_2d(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LatticeChart box = clamped_chart_2d(17);
  WaveFormSpec a_spec = WaveFormSpec::random(rng, box, 1, AlgebraKind::u1, 3, 1.0, 2);
  const LatticeChart chart = clamped_chart_2d(n);
  FormField A0 = a_spec.sample(chart);
  FormField F = exterior_derivative(A0);
  std::vector<int> origin(2, 0);
  for (int a = 0; a < 2; ++a) origin[a] = chart.sizes()[a] / 2;
  FormField A_rec = poincare_reconstruct(F, origin, 1e-8);
  return {std::move(F), std::move(A0), std::move(A_rec)};
}

double roundtrip_2d_value(int n, std::uint64_t seed) {
  RoundTrip rt = roundtrip_2d(n, seed);
  return linf_distance(curvature(rt.A_rec), rt.F);
}

double origin_shift_2d_value(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LatticeChart box = clamped_chart_2d(17);
  WaveFormSpec a_spec = WaveFormSpec::random(rng, box, 1, AlgebraKind::u1, 3, 1.0, 2);
  const LatticeChart chart = clamped_chart_2d(n);
  FormField F = exterior_derivative(a_spec.sample(chart));
  const int cx = chart.sizes()[0] / 2;
  const int cy = chart.sizes()[1] / 2;
  FormField A_p = poincare_reconstruct(F, {cx, cy}, 1e-8);
  FormField A_q = poincare_reconstruct(F, {cx / 2 + 1, cy / 2 + 1}, 1e-8);
  return linf_norm(exterior_derivative(A_p - A_q));
}

double partial_derivative_value(int n) {
  const double s = 8.0 / n;
  const LatticeChart chart({n, n}, {s, s}, Boundary::periodic,
                           MetricSignature::euclidean(2));
  WaveFormSpec spec(2, 0, AlgebraKind::u1);
  const double k = 2.0 * 3.141592653589793238 / 8.0;
  spec.terms(0, 0).push_back({{k, 0.0}, 0.0, 1.0});
  FormField f = spec.sample(chart);
  FormField df = partial_derivative(f, 0);
  FormField exact = spec.sample_exterior_derivative(chart);
  // compare the axis-0 component of the continuum differential
  FormField exact0(chart, LieAlgebra::u1(), 0, 0);
  std::copy(exact.plane(0, 0), exact.plane(0, 0) + chart.site_count(),
            exact0.plane(0, 0));
  return linf_distance(df, exact0);
}

double su2_gradient_identity_value(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LatticeChart chart = covariance_chart(n);
  const TheorySpec T = TheorySpec::yang_mills(chart);
  FormField A = white_noise_form(rng, chart, 1, AlgebraKind::su2, 0.8);
  FormField G = analytic_action_gradient(T, A);
  FormField R = ym_residual(A);
  G.axpy(-2.0, R);
  return linf_norm(G);
}

const std::map<std::string, SweepDef>& sweep_registry() {
  static const std::map<std::string, SweepDef> reg = [] {
    std::map<std::string, SweepDef> m;
    auto wave_h = [](int base) {
      return [base](int l) { return 12.0 / (base << l); };
    };
    auto cov_h = wave_h;
    m["maxwell-wave"] = {"Linf of the Maxwell residual on the null plane wave",
                         16, wave_h(16),
                         [](int l, std::uint64_t) { return maxwell_wave_value(16 << l); }};
    m["bianchi-wave"] = {"Linf of dF on the null plane wave (exact closedness)",
                         16, wave_h(16),
                         [](int l, std::uint64_t) { return bianchi_wave_value(16 << l); }};
    m["noether-wave"] = {"max Linf of div J over random closed parameters",
                         16, wave_h(16), [](int l, std::uint64_t seed) {
                           return noether_wave_value(16 << l, seed, 20);
                         }};
    m["covariance-su2"] = {"Linf of F(A^h) - Ad_{h^-1} F(A)", 12, cov_h(12),
                           [](int l, std::uint64_t seed) {
                             return covariance_su2_value(12 << l, seed);
                           }};
    m["covariance-su2-coarse"] = {"pinned coarse ladder of covariance-su2", 6,
                                  cov_h(6), [](int l, std::uint64_t seed) {
                                    return covariance_su2_value(6 << l, seed);
                                  }};
    m["utiyama-su2"] = {"action change under an su2 gauge transform", 24,
                        cov_h(24), [](int l, std::uint64_t seed) {
                          return utiyama_su2_value(24 << l, seed);
                        }};
    m["bianchi-su2"] = {"Linf of dF + [A^F] for smooth su2 fields", 12, cov_h(12),
                        [](int l, std::uint64_t seed) {
                          return bianchi_su2_value(12 << l, seed);
                        }};
    m["roundtrip-2d"] = {"Linf of curvature(reconstruct(dA)) - dA", 33,
                         [](int l) { return 8.0 / (((33 - 1) << l)); },
                         [](int l, std::uint64_t seed) {
                           return roundtrip_2d_value(((33 - 1) << l) + 1, seed);
                         }};
    m["origin-shift-2d"] = {"Linf of d of the two-origin reconstruction gap", 33,
                            [](int l) { return 8.0 / (((33 - 1) << l)); },
                            [](int l, std::uint64_t seed) {
                              return origin_shift_2d_value(((33 - 1) << l) + 1, seed);
                            }};
    m["partial-derivative"] = {"Linf error of the central difference on sin", 16,
                               [](int l) { return 8.0 / (16 << l); },
                               [](int l, std::uint64_t) {
                                 return partial_derivative_value(16 << l);
                               }};
    m["su2-gradient-identity"] = {"Linf of gradient - 2 residual (exact identity)",
                                  6, cov_h(6), [](int l, std::uint64_t seed) {
                                    return su2_gradient_identity_value(6 << l, seed);
                                  }};
    return m;
  }();
  return reg;
}

}  // namespace

std::vector<double> SweepResult::ratios() const {
  std::vector<double> r;
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    r.push_back(rows[i].value / rows[i + 1].value);
  return r;
}

std::string SweepResult::to_csv() const {
  std::ostringstream os;
  os << "level,h,linf,ratio\n";
  const auto r = ratios();
  for (size_t i = 0; i < rows.size(); ++i) {
    os << rows[i].level << "," << format_double(rows[i].h) << ","
       << format_double(rows[i].value) << ",";
    if (i > 0) os << format_double(r[i - 1]);
    os << "\n";
  }
  return os.str();
}

SweepResult run_sweep(const std::string& name, int levels, std::uint64_t seed) {
  if (levels < 2) throw std::invalid_argument("a sweep needs at least 2 levels");
  const auto& reg = sweep_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown sweep: " + name);
  return run_levels(name, it->second, levels, seed);
}

std::vector<std::string> sweep_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : sweep_registry()) names.push_back(k);
  return names;
}

// ---- suites --------------------------------------------------------------

ResidualReport suite_calculus(std::uint64_t seed, int n_random) {
  std::mt19937_64 rng(seed);
  ResidualReport rep;
  rep.title = "calculus";
  rep.seed = seed;
  const LatticeChart periodic = calculus_chart();
  const LatticeChart clamped = clamped_chart_3d(9);
  rep.chart = periodic.describe() + " | " + clamped.describe();

  for (const LatticeChart* chart : {&periodic, &clamped}) {
    const std::string tag =
        chart->boundary() == Boundary::periodic ? "periodic" : "clamped";
    const int dim = chart->dim();
    for (int k = 0; k + 2 <= dim; ++k) {
      double worst = 0.0;
      for (int i = 0; i < n_random; ++i) {
        FormField w = white_noise_form(rng, *chart, k, AlgebraKind::u1);
        worst = std::max(worst, linf_norm(exterior_derivative(exterior_derivative(w))));
      }
      std::ostringstream name;
      name << "dd_zero." << tag << ".k" << k;
      rep.check(name.str(), 0.0, worst, 1e-13);
    }
    for (int k = 0; k <= dim; ++k) {
      FormField w = white_noise_form(rng, *chart, k, AlgebraKind::u1);
      FormField ss = hodge_star(hodge_star(w));
      const int sign = (((k * (dim - k)) % 2 == 0) ? 1 : -1) *
                       chart->signature().parity();
      FormField expect = w;
      expect *= sign;
      std::ostringstream name;
      name << "star_star." << tag << ".k" << k;
      rep.check(name.str(), 0.0, linf_distance(ss, expect), 0.0,
                "sign " + std::to_string(sign));
    }
  }

  const int dim = periodic.dim();
  for (int k = 1; k <= dim; ++k) {
    double worst = 0.0;
    for (int i = 0; i < n_random; ++i) {
      FormField alpha = white_noise_form(rng, periodic, k - 1, AlgebraKind::u1);
      FormField beta = white_noise_form(rng, periodic, k, AlgebraKind::u1);
      FormField dalpha = exterior_derivative(alpha);
      const double lhs = inner_product(dalpha, beta);
      const double rhs = inner_product(alpha, codifferential(beta));
      // relative to the Cauchy-Schwarz scale of the pairing, so the check
      // measures the operators rather than cancellation in the sums
      const double scale = std::max(l2_norm(dalpha) * l2_norm(beta), 1e-30);
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    std::ostringstream name;
    name << "adjoint.k" << k;
    rep.check(name.str(), 0.0, worst, 1e-12, "relative to |da|_2 |b|_2");
  }

  for (int k = 0; k <= dim; ++k) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      FormField alpha = white_noise_form(rng, periodic, k, AlgebraKind::u1);
      FormField beta = white_noise_form(rng, periodic, k, AlgebraKind::u1);
      FormField lhs = wedge(alpha, hodge_star(beta));
      FormField rhs = pointwise_pairing(alpha, beta);
      // both are coefficient fields of the volume form
      double scale = 1.0 + linf_norm(rhs);
      FormField lhs0(periodic, LieAlgebra::u1(), 0, 0);
      std::copy(lhs.plane(0, 0), lhs.plane(0, 0) + periodic.site_count(),
                lhs0.plane(0, 0));
      worst = std::max(worst, linf_distance(lhs0, rhs) / scale);
    }
    std::ostringstream name;
    name << "hodge_defining_relation.k" << k;
    rep.check(name.str(), 0.0, worst, 1e-12, "relative");
  }

  {
    SweepResult sw = run_sweep("partial-derivative", 3, seed);
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "partial_derivative_order.ratio" << i;
      rep.check_range(name.str(), r[i], 3.5, 4.5);
    }
  }
  return rep;
}

ResidualReport suite_gauge(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ResidualReport rep;
  rep.title = "gauge";
  rep.seed = seed;
  const LatticeChart chart = covariance_chart(12);
  rep.chart = chart.describe();

  {  // Abelian exactness through the group action, 20 random pairs
    double worst = 0.0;
    double scale = 1.0;
    for (int i = 0; i < 20; ++i) {
      FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
      GroupField h = random_group_field(rng, chart, AlgebraKind::u1, 3, 1.0);
      FormField FA = curvature(A);
      FormField FAh = curvature(gauge_transform_connection(A, h));
      worst = std::max(worst, linf_distance(FA, FAh));
      scale = std::max(scale, linf_norm(FA));
    }
    rep.check("abelian_curvature_invariance", 0.0, worst / scale, 1e-12, "relative");
  }

  {  // graded antisymmetry of the bracket wedge, all degree pairs
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; k + l <= 3; ++l) {
        FormField a = white_noise_form(rng, chart, k, AlgebraKind::su2);
        FormField b = white_noise_form(rng, chart, l, AlgebraKind::su2);
        FormField lhs = bracket_wedge(a, b);
        FormField rhs = bracket_wedge(b, a);
        const double sign = ((k * l) % 2 == 0) ? -1.0 : 1.0;
        rhs *= sign;
        worst = std::max(worst, linf_distance(lhs, rhs));
      }
    }
    rep.check("bracket_wedge_graded_antisymmetry", 0.0, worst, 1e-14);
  }

  {  // phi map constraint
    FormField xi = white_noise_form(rng, chart, 1, AlgebraKind::su2);
    auto [first, second] = phi_map(xi);
    FormField expect = bracket_wedge(xi, xi);
    expect *= -0.5;
    rep.check("phi_map_skew_constraint", 0.0, linf_distance(second, expect), 0.0);
    rep.check("phi_map_identity_slot", 0.0, linf_distance(first, xi), 0.0);
  }

  {  // non-Abelian covariance order: successive ratios near 4, mean pinned
    SweepResult sw = run_sweep("covariance-su2", 3, seed);
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "covariance_order.ratio" << i;
      rep.check_range(name.str(), r[i], 3.2, 4.8);
    }
    rep.check_range("covariance_order.mean_ratio",
                    std::sqrt(sw.rows.front().value / sw.rows.back().value), 3.5,
                    4.5, "geometric mean per halving");
  }

  {  // Bianchi: exact for u1, order 2 for su2
    FormField A = random_smooth_form(rng, wave_chart(12), 1, AlgebraKind::u1, 3, 1.0);
    rep.check("bianchi_u1_exact", 0.0, linf_norm(bianchi_residual(A)), 1e-13);
    SweepResult sw = run_sweep("bianchi-su2", 3, seed);
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "bianchi_su2_order.ratio" << i;
      rep.check_range(name.str(), r[i], 3.2, 4.8);
    }
    rep.check_range("bianchi_su2_order.mean_ratio",
                    std::sqrt(sw.rows.front().value / sw.rows.back().value), 3.5,
                    4.5, "geometric mean per halving");
  }
  return rep;
}

ResidualReport suite_utiyama(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ResidualReport rep;
  rep.title = "utiyama";
  rep.seed = seed;
  const LatticeChart chart = wave_chart(12);
  rep.chart = chart.describe();
  const TheorySpec TM = TheorySpec::maxwell(chart);

  {  // u1: the action factors through the (gauge invariant) curvature
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
      FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 3, 1.0);
      FormField Ah = A + exterior_derivative(chi);
      const double s0 = action(TM, A);
      const double s1 = action(TM, Ah);
      worst = std::max(worst, std::abs(s1 - s0) / (1.0 + std::abs(s0)));
    }
    rep.check("u1_action_invariance", 0.0, worst, 1e-10, "relative");
  }

  {  // su2: invariance defect decays at order 2
    SweepResult sw = run_sweep("utiyama-su2", 3, seed);
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "su2_action_invariance.ratio" << i;
      rep.check_range(name.str(), r[i], 3.5, 4.5);
    }
  }

  {  // negative control: g(A,A) is not gauge invariant
    FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
    FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 3, 1.0);
    FormField Ah = A + exterior_derivative(chi);
    const double s0 = inner_product(A, A);
    const double s1 = inner_product(Ah, Ah);
    const double change = std::abs(s1 - s0) / std::max(std::abs(s0), 1e-30);
    rep.check_range("negative_control_gAA_changes", change, 1e-2, 1e30,
                    "a potential-dependent density must move");
  }

  {  // the coadjoint identity for the quadratic density
    std::mt19937_64 r2(seed + 1);
    const LatticeChart c3 = covariance_chart(6);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      FormField F = white_noise_form(r2, c3, 2, AlgebraKind::su2);
      worst = std::max(worst, curvature_coadjoint_residual(F));
    }
    rep.check("curvature_coadjoint_identity", 0.0, worst, 1e-12);
  }
  return rep;
}

ResidualReport suite_equivalence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ResidualReport rep;
  rep.title = "equivalence";
  rep.seed = seed;
  rep.chart = calculus_chart().describe();

  {  // Maxwell: gradient is exactly twice the reduced residual
    const LatticeChart chart = calculus_chart();
    const TheorySpec T = TheorySpec::maxwell(chart);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      FormField A = white_noise_form(rng, chart, 1, AlgebraKind::u1);
      FormField G = analytic_action_gradient(T, A);
      const double scale = 1.0 + linf_norm(G);
      FormField R = maxwell_residual(field_strength(T, A));
      G.axpy(-2.0, R);
      worst = std::max(worst, linf_norm(G) / scale);
    }
    rep.check("maxwell_gradient_equals_2_residual", 0.0, worst, 1e-12, "relative");
  }

  {  // k-form electromagnetism obeys the same identity
    const LatticeChart chart = calculus_chart();
    const TheorySpec T = TheorySpec::kform_em(chart, 2);
    FormField A = white_noise_form(rng, chart, 2, AlgebraKind::u1);
    FormField G = analytic_action_gradient(T, A);
    const double scale = 1.0 + linf_norm(G);
    FormField R = maxwell_residual(field_strength(T, A));
    G.axpy(-2.0, R);
    rep.check("kform_gradient_equals_2_residual", 0.0, linf_norm(G) / scale, 1e-12,
              "relative");
  }

  {  // finite-difference oracle, u1
    const LatticeChart chart = solver_chart(8);
    const TheorySpec T = TheorySpec::maxwell(chart);
    FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 0.5);
    FormField G = analytic_action_gradient(T, A);
    FormField FD = numeric_action_gradient(T, A, 1e-5);
    const double rel = linf_distance(FD, G) / (1e-30 + linf_norm(G));
    rep.check("fd_gradient_matches_u1", 0.0, rel, 1e-8, "relative");
  }

  {  // finite-difference oracle, su2
    const LatticeChart chart = covariance_chart(6);
    const TheorySpec T = TheorySpec::yang_mills(chart);
    FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::su2, 3, 0.5);
    FormField G = analytic_action_gradient(T, A);
    FormField FD = numeric_action_gradient(T, A, 1e-5);
    const double rel = linf_distance(FD, G) / (1e-30 + linf_norm(G));
    rep.check("fd_gradient_matches_su2", 0.0, rel, 1e-6, "relative");
  }
  return rep;
}

ResidualReport suite_noether(std::uint64_t seed) {
  ResidualReport rep;
  rep.title = "noether";
  rep.seed = seed;
  const LatticeChart chart = wave_chart(12);
  rep.chart = chart.describe();
  const TheorySpec T = TheorySpec::maxwell(chart);

  {  // a critical point with zero field has an exactly conserved current
    std::mt19937_64 rng(seed);
    FormField A0(chart, LieAlgebra::u1(), 1);
    FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 3, 1.0);
    FormField xi = exterior_derivative(chi);
    FormField div = noether_divergence(T, A0, xi);
    rep.check("divergence_at_zero_field", l2_norm(div), linf_norm(div), 0.0);
  }

  {  // o(h^2) decay of div J on the plane-wave solution
    SweepResult sw = run_sweep("noether-wave", 3, seed);
    for (const auto& row : sw.rows) {
      std::ostringstream name;
      name << "divJ_level" << row.level;
      rep.info(name.str(), 0.0, row.value, "h=" + format_double(row.h));
    }
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "divJ_decay.ratio" << i;
      rep.check_range(name.str(), r[i], 3.2, 4.8);
    }
    const double mean =
        std::sqrt(sw.rows.front().value / sw.rows.back().value);
    rep.check_range("divJ_decay.mean_ratio", mean, 3.5, 4.5,
                    "geometric mean per halving");
  }

  {  // non-closed parameters are refused
    std::mt19937_64 rng(seed + 2);
    FormField A = wave_potential(chart);
    FormField xi = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
    bool refused = false;
    try {
      noether_current(T, A, xi);
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    rep.add("non_closed_parameter_refused", 0.0, refused ? 0.0 : 1.0, 0.0, refused);
  }
  return rep;
}

ResidualReport suite_bianchi(std::uint64_t seed) {
  ResidualReport rep;
  rep.title = "bianchi";
  rep.seed = seed;
  const LatticeChart chart = wave_chart(12);
  rep.chart = chart.describe();

  {  // reference chart values
    FormField A = wave_potential(chart);
    FormField F = exterior_derivative(A);
    rep.info("maxwell_residual_12", l2_norm(maxwell_residual(F)),
             linf_norm(maxwell_residual(F)));
    rep.check("bianchi_12", 0.0, linf_norm(bianchi_residual(A)), 1e-12);
  }

  {  // wave residual converges at order 2; closedness is exact at every level
    SweepResult sw = run_sweep("maxwell-wave", 3, seed);
    for (const auto& row : sw.rows) {
      std::ostringstream name;
      name << "maxwell_wave_level" << row.level;
      rep.info(name.str(), 0.0, row.value, "h=" + format_double(row.h));
    }
    const auto r = sw.ratios();
    for (size_t i = 0; i < r.size(); ++i) {
      std::ostringstream name;
      name << "maxwell_wave.ratio" << i;
      rep.check_range(name.str(), r[i], 3.5, 4.5);
    }
    SweepResult bw = run_sweep("bianchi-wave", 3, seed);
    for (const auto& row : bw.rows) {
      std::ostringstream name;
      name << "bianchi_wave_level" << row.level;
      rep.check(name.str(), 0.0, row.value, 1e-12, "h=" + format_double(row.h));
    }
  }
  return rep;
}

ResidualReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "calculus") return suite_calculus(seed);
  if (name == "gauge") return suite_gauge(seed);
  if (name == "utiyama") return suite_utiyama(seed);
  if (name == "equivalence") return suite_equivalence(seed);
  if (name == "noether") return suite_noether(seed);
  if (name == "bianchi") return suite_bianchi(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"calculus", "gauge", "utiyama", "equivalence", "noether", "bianchi"};
}

}  // namespace lgt
