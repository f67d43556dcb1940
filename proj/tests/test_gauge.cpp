#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lgt/gauge.hpp"
#include "lgt/synth.hpp"

using namespace lgt;

namespace {

LatticeChart chart3(int n = 8, double h = 1.0) {
  return LatticeChart({n, n, n}, {h, h, h}, Boundary::periodic,
                      MetricSignature::euclidean(3));
}

LatticeChart clamped2(int n = 9) {
  return LatticeChart({n, n}, {1.0, 1.0}, Boundary::clamped,
                      MetricSignature::euclidean(2));
}

FormField constant_su2_1form(const LatticeChart& chart) {
  // A = e1 dx + e2 dy
  FormField A(chart, LieAlgebra::su2(), 1);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    A.at(s, 0, 0) = 1.0;
    A.at(s, 1, 1) = 1.0;
  }
  return A;
}

}  // namespace

TEST_CASE("bracket_wedge: abelian zero, constant su2 shuffle values") {
  LatticeChart chart = chart3();
  std::mt19937_64 rng(3);
  FormField a = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 1.0);
  CHECK(linf_norm(bracket_wedge(a, a)) == 0.0);

  // alpha = e1 dx, beta = e2 dy: [alpha ^ beta] = e3 dx^dy
  FormField alpha(chart, LieAlgebra::su2(), 1);
  FormField beta(chart, LieAlgebra::su2(), 1);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    alpha.at(s, 0, 0) = 1.0;
    beta.at(s, 1, 1) = 1.0;
  }
  FormField w = bracket_wedge(alpha, beta);
  const int dxdy = MultiIndexTable::get(3, 2).index_of(std::vector<int>{0, 1});
  for (std::int64_t s = 0; s < chart.site_count(); s += 5) {
    CHECK(w.at(s, dxdy, 2) == doctest::Approx(1.0));
    CHECK(w.at(s, dxdy, 0) == 0.0);
  }

  // [A ^ A] = 2 e3 dx^dy for A = e1 dx + e2 dy
  FormField A = constant_su2_1form(chart);
  FormField aa = bracket_wedge(A, A);
  for (std::int64_t s = 0; s < chart.site_count(); s += 5)
    CHECK(aa.at(s, dxdy, 2) == doctest::Approx(2.0));

  CHECK_THROWS_AS(bracket_wedge(aa, aa), std::invalid_argument);
}

TEST_CASE("bracket_wedge graded antisymmetry is exact") {
  LatticeChart chart = chart3(6);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; k + l <= 3; ++l) {
      FormField a(chart, LieAlgebra::su2(), k);
      FormField b(chart, LieAlgebra::su2(), l);
      for (double& v : a.raw()) v = u(rng);
      for (double& v : b.raw()) v = u(rng);
      FormField ab = bracket_wedge(a, b);
      FormField ba = bracket_wedge(b, a);
      ba *= ((k * l) % 2 == 0) ? -1.0 : 1.0;
      // identical products, possibly summed in a different order
      CHECK(linf_distance(ab, ba) <= 1e-14);
    }
  }
}

TEST_CASE("curvature: zero, abelian affine exactness, constant su2") {
  LatticeChart c2 = clamped2(9);
  FormField zero(c2, LieAlgebra::u1(), 1);
  CHECK(linf_norm(curvature(zero)) == 0.0);

  // A = x dy has curvature dx^dy with unit coefficient on the interior
  FormField A(c2, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < c2.site_count(); ++s)
    A.at(s, 1, 0) = c2.position(0, c2.coord(s, 0));
  FormField F = curvature(A);
  for_each_interior_site(c2, 1, [&](std::int64_t s) {
    CHECK(F.at(s, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  });

  // constant A = e1 dx + e2 dy: dA = 0, F = 1/2 [A^A] = e3 dx^dy
  LatticeChart c3 = chart3();
  FormField As = constant_su2_1form(c3);
  FormField Fs = curvature(As);
  const int dxdy = MultiIndexTable::get(3, 2).index_of(std::vector<int>{0, 1});
  for (std::int64_t s = 0; s < c3.site_count(); s += 7) {
    CHECK(Fs.at(s, dxdy, 2) == doctest::Approx(1.0));
    CHECK(Fs.at(s, dxdy, 1) == 0.0);
  }
}

TEST_CASE("group derivative: constants, u1 phases, su2 one-parameter profile") {
  LatticeChart chart = chart3();
  GroupField h(chart, AlgebraKind::su2);
  for (std::int64_t s = 0; s < chart.site_count(); ++s)
    h.at(s) = GroupElement::exp(LieAlgebra::su2(), std::array<double, 3>{0.3, -1.0, 0.6});
  auto gd = group_derivative_term(h);
  CHECK(linf_norm(gd.form) <= 1e-15);
  CHECK(gd.max_step_fraction <= 1e-15);

  // u1: h = exp(i chi) reproduces the discrete gradient of chi exactly
  std::mt19937_64 rng(11);
  FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 3, 1.0);
  GroupField hu = group_exponential(chi);
  auto gdu = group_derivative_term(hu);
  FormField dchi = exterior_derivative(chi);
  CHECK(linf_distance(gdu.form, dchi) <= 1e-13);
  CHECK(gdu.max_step_fraction < 0.5);

  // su2 axis-aligned one-parameter profile: (dh)h^-1 = (dt) e3
  GroupField hs(chart, AlgebraKind::su2);
  FormField t(chart, LieAlgebra::u1(), 0);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    const double tv = 0.8 * std::sin(2 * 3.14159265358979 *
                                     chart.coord(s, 0) / chart.sizes()[0]);
    t.at(s, 0, 0) = tv;
    hs.at(s) = GroupElement::exp(LieAlgebra::su2(), std::array<double, 3>{0, 0, tv});
  }
  auto gds = group_derivative_term(hs);
  FormField dt = exterior_derivative(t);
  double worst = 0.0;
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    worst = std::max(worst, std::abs(gds.form.at(s, 0, 2) - dt.at(s, 0, 0)));
    worst = std::max(worst, std::abs(gds.form.at(s, 0, 0)));
    worst = std::max(worst, std::abs(gds.form.at(s, 0, 1)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("gauge transforms: identity, abelian shift, curvature invariants") {
  LatticeChart chart = chart3();
  std::mt19937_64 rng(13);
  FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
  GroupField id(chart, AlgebraKind::u1);
  CHECK(linf_distance(gauge_transform_connection(A, id), A) == 0.0);

  // u1: A^h = A + d chi
  FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 3, 1.0);
  GroupField h = group_exponential(chi);
  FormField Ah = gauge_transform_connection(A, h);
  FormField expect = A + exterior_derivative(chi);
  CHECK(linf_distance(Ah, expect) <= 1e-13);
  // abelian exactness of the curvature through the group action
  CHECK(linf_distance(curvature(Ah), curvature(A)) <= 1e-12);

  // su2 pointwise invariance of K(F,F) under constant transforms
  FormField As = random_smooth_form(rng, chart, 1, AlgebraKind::su2, 3, 0.8);
  FormField Fs = curvature(As);
  GroupField hs(chart, AlgebraKind::su2);
  for (std::int64_t s = 0; s < chart.site_count(); ++s)
    hs.at(s) = GroupElement::exp(LieAlgebra::su2(), std::array<double, 3>{0.7, 0.2, -0.4});
  FormField Fg = gauge_transform_curvature(Fs, hs);
  FormField pp = pointwise_pairing(Fs, Fs);
  FormField pg = pointwise_pairing(Fg, Fg);
  CHECK(linf_distance(pp, pg) <= 1e-12);
  CHECK(linf_distance(gauge_transform_curvature(curvature(A), id), curvature(A)) == 0.0);
}

TEST_CASE("su2 covariance gap of the curvature shrinks at second order") {
  std::mt19937_64 rng(17);
  auto gap = [&](int n) {
    const double h = 12.0 / n;
    LatticeChart chart({n, n, n}, {h, h, h}, Boundary::periodic,
                       MetricSignature::euclidean(3));
    std::mt19937_64 local(99);
    LatticeChart box({12, 12, 12}, {1, 1, 1}, Boundary::periodic,
                     MetricSignature::euclidean(3));
    WaveFormSpec a_spec = WaveFormSpec::random(local, box, 1, AlgebraKind::su2, 2, 0.8, 1);
    WaveFormSpec x_spec = WaveFormSpec::random(local, box, 0, AlgebraKind::su2, 2, 0.5, 1);
    FormField A = a_spec.sample(chart);
    GroupField hh = group_exponential(x_spec.sample(chart));
    FormField lhs = curvature(gauge_transform_connection(A, hh));
    FormField rhs = gauge_transform_curvature(curvature(A), hh);
    return linf_distance(lhs, rhs);
  };
  const double ratio = gap(8) / gap(16);
  CHECK(ratio >= 3.2);
  CHECK(ratio <= 4.8);
}

TEST_CASE("phi map returns the pair with the skew constraint") {
  LatticeChart chart = chart3(6);
  FormField zero(chart, LieAlgebra::su2(), 1);
  auto [z1, z2] = phi_map(zero);
  CHECK(linf_norm(z1) == 0.0);
  CHECK(linf_norm(z2) == 0.0);

  std::mt19937_64 rng(19);
  FormField xi_u1 = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 1.0);
  auto [u1a, u1b] = phi_map(xi_u1);
  CHECK(linf_norm(u1b) == 0.0);  // abelian: no skew term

  // xi = e1 dx + e2 dy: second slot is -e3 dx^dy
  FormField xi = constant_su2_1form(chart);
  auto [first, second] = phi_map(xi);
  CHECK(linf_distance(first, xi) == 0.0);
  const int dxdy = MultiIndexTable::get(3, 2).index_of(std::vector<int>{0, 1});
  for (std::int64_t s = 0; s < chart.site_count(); s += 7)
    CHECK(second.at(s, dxdy, 2) == doctest::Approx(-1.0));
}

TEST_CASE("group derivative flags a too-coarse grid") {
  LatticeChart chart = chart3(6);
  GroupField h(chart, AlgebraKind::u1);
  // neighbor phases jump by almost pi: the one-step logs sit near the
  // principal branch cut
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    const double angle = 3.0 * chart.coord(s, 0);
    h.at(s) = GroupElement::exp(LieAlgebra::u1(), std::array<double, 1>{angle});
  }
  auto gd = group_derivative_term(h);
  CHECK(gd.max_step_fraction > 0.5);
}

TEST_CASE("abelian curvature transforms trivially under any u1 group field") {
  LatticeChart chart = chart3(6);
  std::mt19937_64 rng(29);
  FormField F = random_smooth_form(rng, chart, 2, AlgebraKind::u1, 2, 1.0);
  GroupField h = random_group_field(rng, chart, AlgebraKind::u1, 2, 1.0);
  CHECK(linf_distance(gauge_transform_curvature(F, h), F) == 0.0);
}
