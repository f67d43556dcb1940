#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lgt/calculus.hpp"
#include "lgt/synth.hpp"

using namespace lgt;

namespace {

const double kPi = 3.14159265358979323846;

LatticeChart periodic2d(int n = 16, double h = 0.5) {
  return LatticeChart({n, n}, {h, h}, Boundary::periodic,
                      MetricSignature::euclidean(2));
}

LatticeChart clamped2d(int n = 9, double h = 1.0) {
  return LatticeChart({n, n}, {h, h}, Boundary::clamped,
                      MetricSignature::euclidean(2));
}

FormField noise(std::mt19937_64& rng, const LatticeChart& chart, int degree) {
  FormField f(chart, LieAlgebra::u1(), degree, 0);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double& v : f.raw()) v = u(rng);
  return f;
}

// sign of the permutation sorting (a..., b...) computed independently by
// bubble counting over the concatenated list
int bubble_sign(std::vector<int> v) {
  int swaps = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++swaps;
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("partial derivative: constants, affine exactness, errors") {
  LatticeChart chart = clamped2d();
  FormField c(chart, LieAlgebra::u1(), 0);
  for (double& v : c.raw()) v = 3.25;
  FormField dc = partial_derivative(c, 0);
  CHECK(linf_norm(dc) == 0.0);
  CHECK(dc.margin() == 1);

  // f = x is differentiated exactly on the interior
  FormField f(chart, LieAlgebra::u1(), 0);
  for (std::int64_t s = 0; s < chart.site_count(); ++s)
    f.at(s, 0, 0) = chart.position(0, chart.coord(s, 0));
  FormField df = partial_derivative(f, 0);
  for_each_interior_site(chart, 1, [&](std::int64_t s) {
    CHECK(df.at(s, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  });

  CHECK_THROWS_AS(partial_derivative(f, 2), std::invalid_argument);
}

TEST_CASE("partial derivative converges at second order on sin") {
  auto err = [](int n) {
    const double h = 8.0 / n;
    LatticeChart chart({n, n}, {h, h}, Boundary::periodic,
                       MetricSignature::euclidean(2));
    const double k = 2 * kPi / 8.0;
    FormField f(chart, LieAlgebra::u1(), 0);
    for (std::int64_t s = 0; s < chart.site_count(); ++s)
      f.at(s, 0, 0) = std::sin(k * chart.position(0, chart.coord(s, 0)));
    FormField df = partial_derivative(f, 0);
    double worst = 0.0;
    for (std::int64_t s = 0; s < chart.site_count(); ++s)
      worst = std::max(worst,
                       std::abs(df.at(s, 0, 0) -
                                k * std::cos(k * chart.position(0, chart.coord(s, 0)))));
    return worst;
  };
  const double ratio = err(16) / err(32);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
  // the discrete symbol is sin(kh)/h exactly
  const double h = 0.5, k = 2 * kPi / 8.0;
  CHECK(err(16) == doctest::Approx(k - std::sin(k * h) / h).epsilon(1e-10));
}

TEST_CASE("exterior derivative: zero, bilinear exactness, dd = 0") {
  LatticeChart chart = clamped2d();
  FormField zero(chart, LieAlgebra::u1(), 0);
  CHECK(linf_norm(exterior_derivative(zero)) == 0.0);

  // chi = x y has d chi = y dx + x dy exactly at interior points
  FormField chi(chart, LieAlgebra::u1(), 0);
  for (std::int64_t s = 0; s < chart.site_count(); ++s)
    chi.at(s, 0, 0) =
        chart.position(0, chart.coord(s, 0)) * chart.position(1, chart.coord(s, 1));
  FormField dchi = exterior_derivative(chi);
  for_each_interior_site(chart, 1, [&](std::int64_t s) {
    CHECK(dchi.at(s, 0, 0) ==
          doctest::Approx(chart.position(1, chart.coord(s, 1))).epsilon(1e-14));
    CHECK(dchi.at(s, 1, 0) ==
          doctest::Approx(chart.position(0, chart.coord(s, 0))).epsilon(1e-14));
  });

  std::mt19937_64 rng(17);
  for (const Boundary b : {Boundary::periodic, Boundary::clamped}) {
    LatticeChart c4({6, 6, 6, 6}, {1.0, 0.7, 1.3, 0.5}, b,
                    MetricSignature::lorentzian(4));
    for (int k = 0; k <= 2; ++k) {
      FormField w = noise(rng, c4, k);
      FormField ddw = exterior_derivative(exterior_derivative(w));
      CHECK(linf_norm(ddw) <= 1e-13);
    }
  }
}

TEST_CASE("exterior derivative at top degree is the degenerate zero field") {
  LatticeChart chart = periodic2d(8);
  std::mt19937_64 rng(1);
  FormField top = noise(rng, chart, 2);
  FormField d = exterior_derivative(top);
  CHECK(d.degenerate());
  CHECK(d.degree() == 2);
  CHECK(linf_norm(d) == 0.0);
}

TEST_CASE("hodge star matches the brute-force defining relation") {
  // solve a ^ *b = g(a,b) v_g over the component basis, with an independent
  // bubble-sort sign
  std::mt19937_64 rng(23);
  for (int dim : {2, 3, 4}) {
    std::vector<int> sizes(dim, 4);
    std::vector<double> sp(dim, 1.0);
    MetricSignature sig =
        dim == 4 ? MetricSignature::lorentzian(4) : MetricSignature::euclidean(dim);
    LatticeChart chart(sizes, sp, Boundary::periodic, sig);
    for (int k = 0; k <= dim; ++k) {
      FormField b = noise(rng, chart, k);
      FormField sb = hodge_star(b);
      const auto& tk = MultiIndexTable::get(dim, k);
      const auto& tc = MultiIndexTable::get(dim, dim - k);
      for (int i = 0; i < tk.count(); ++i) {
        // with a = basis_I, a ^ *b picks the complement component of *b:
        // sign(I, I^c) (*b)_{I^c} must equal gI(I) b_I
        std::vector<int> concat(tk.axes(i));
        const auto compl_axes = tk.complement(i);
        concat.insert(concat.end(), compl_axes.begin(), compl_axes.end());
        const int sign = bubble_sign(concat);
        const int gw = metric_weight(chart, tk.axes(i));
        const int j = tc.index_of(compl_axes);
        for (std::int64_t s = 0; s < chart.site_count(); s += 7)
          CHECK(sign * sb.at(s, j, 0) ==
                doctest::Approx(gw * b.at(s, i, 0)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("hodge star: 2d axis examples and star of 1") {
  LatticeChart chart = periodic2d(4, 1.0);
  FormField dx(chart, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) dx.at(s, 0, 0) = 1.0;
  FormField sdx = hodge_star(dx);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    CHECK(sdx.at(s, 0, 0) == 0.0);
    CHECK(sdx.at(s, 1, 0) == 1.0);  // *dx = dy
  }
  FormField dy(chart, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) dy.at(s, 1, 0) = 1.0;
  FormField sdy = hodge_star(dy);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    CHECK(sdy.at(s, 0, 0) == -1.0);  // *dy = -dx
    CHECK(sdy.at(s, 1, 0) == 0.0);
  }

  FormField one(chart, LieAlgebra::u1(), 0);
  for (double& v : one.raw()) v = 1.0;
  FormField vol = hodge_star(one);
  CHECK(vol.degree() == 2);
  CHECK(linf_norm(vol) == 1.0);
  CHECK(l2_norm(vol - hodge_star(one)) == 0.0);
}

TEST_CASE("star star sign law on random fields, both signatures") {
  std::mt19937_64 rng(29);
  for (bool lorentzian : {false, true}) {
    MetricSignature sig = lorentzian ? MetricSignature::lorentzian(4)
                                     : MetricSignature::euclidean(4);
    LatticeChart chart({4, 4, 4, 4}, {1, 1, 1, 1}, Boundary::periodic, sig);
    for (int k = 0; k <= 4; ++k) {
      FormField w = noise(rng, chart, k);
      FormField ss = hodge_star(hodge_star(w));
      const int expect = ((k * (4 - k)) % 2 == 0 ? 1 : -1) * sig.parity();
      FormField scaled = w;
      scaled *= expect;
      CHECK(linf_distance(ss, scaled) == 0.0);
      // and the declared inverse really inverts
      CHECK(linf_distance(hodge_star(hodge_star_inverse(w)), w) == 0.0);
      CHECK(linf_distance(hodge_star_inverse(hodge_star(w)), w) == 0.0);
    }
  }
}

TEST_CASE("codifferential: zero, adjoint identity, divergence oracle") {
  LatticeChart chart({6, 6, 6, 6}, {1.0, 0.8, 1.2, 0.6}, Boundary::periodic,
                     MetricSignature::lorentzian(4));
  FormField zero(chart, LieAlgebra::u1(), 2);
  CHECK(linf_norm(codifferential(zero)) == 0.0);
  CHECK_THROWS_AS(codifferential(FormField(chart, LieAlgebra::u1(), 0)),
                  std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 100; ++trial) {
      FormField alpha = noise(rng, chart, k - 1);
      FormField beta = noise(rng, chart, k);
      FormField dalpha = exterior_derivative(alpha);
      const double lhs = inner_product(dalpha, beta);
      const double rhs = inner_product(alpha, codifferential(beta));
      const double scale = std::max(l2_norm(dalpha) * l2_norm(beta), 1e-30);
      CHECK(std::abs(lhs - rhs) / scale <= 1e-12);
    }
  }

  // beta = x dy on a clamped 2d chart: delta beta = -div(0, x) = 0
  LatticeChart c2 = clamped2d();
  FormField beta(c2, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < c2.site_count(); ++s)
    beta.at(s, 1, 0) = c2.position(0, c2.coord(s, 0));
  FormField db = codifferential(beta);
  CHECK(linf_norm(db) <= 1e-14);

  // independent finite-difference divergence oracle on a generic 1-form
  FormField gamma(c2, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < c2.site_count(); ++s) {
    const double x = c2.position(0, c2.coord(s, 0));
    const double y = c2.position(1, c2.coord(s, 1));
    gamma.at(s, 0, 0) = x * x + y;
    gamma.at(s, 1, 0) = x * y;
  }
  FormField dg = codifferential(gamma);
  for_each_interior_site(c2, 1, [&](std::int64_t s) {
    const std::int64_t xp = c2.neighbor(s, 0, +1), xm = c2.neighbor(s, 0, -1);
    const std::int64_t yp = c2.neighbor(s, 1, +1), ym = c2.neighbor(s, 1, -1);
    const double div =
        (gamma.at(xp, 0, 0) - gamma.at(xm, 0, 0)) / (2 * c2.spacings()[0]) +
        (gamma.at(yp, 1, 0) - gamma.at(ym, 1, 0)) / (2 * c2.spacings()[1]);
    CHECK(dg.at(s, 0, 0) == doctest::Approx(-div).epsilon(1e-12));
  });
}

TEST_CASE("inner product: zeros, volumes, Lorentzian sign") {
  LatticeChart chart({4, 4}, {1.0, 1.0}, Boundary::periodic,
                     MetricSignature::euclidean(2));
  FormField zero(chart, LieAlgebra::u1(), 1);
  FormField dx(chart, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) dx.at(s, 0, 0) = 1.0;
  CHECK(inner_product(zero, dx) == 0.0);
  CHECK(inner_product(dx, dx) == doctest::Approx(16.0));  // total volume

  LatticeChart lor({4, 4, 4, 4}, {1, 1, 1, 1}, Boundary::periodic,
                   MetricSignature::lorentzian(4));
  FormField dt(lor, LieAlgebra::u1(), 1);
  for (std::int64_t s = 0; s < lor.site_count(); ++s) dt.at(s, 0, 0) = 1.0;
  // component-sum oracle: sum over sites of g^{00} * 1 * vol
  CHECK(inner_product(dt, dt) == doctest::Approx(-256.0));
  CHECK_THROWS_AS(inner_product(dt, FormField(lor, LieAlgebra::u1(), 2)),
                  std::invalid_argument);
}

TEST_CASE("wedge: shuffle signs and degree overflow") {
  LatticeChart chart = periodic2d(4, 1.0);
  std::mt19937_64 rng(37);
  FormField a = noise(rng, chart, 1);
  FormField b = noise(rng, chart, 1);
  FormField ab = wedge(a, b);
  for (std::int64_t s = 0; s < chart.site_count(); ++s) {
    const double expect =
        a.at(s, 0, 0) * b.at(s, 1, 0) - a.at(s, 1, 0) * b.at(s, 0, 0);
    CHECK(ab.at(s, 0, 0) == doctest::Approx(expect).epsilon(1e-14));
  }
  CHECK_THROWS_AS(wedge(ab, b), std::invalid_argument);
}

TEST_CASE("margins compose and norms exclude invalid layers") {
  LatticeChart chart = clamped2d(9);
  std::mt19937_64 rng(41);
  FormField w = noise(rng, chart, 0);
  FormField dw = exterior_derivative(w);
  CHECK(dw.margin() == 1);
  FormField ddw = exterior_derivative(dw);
  CHECK(ddw.margin() == 2);
  CHECK(linf_norm(ddw) <= 1e-13);
  // exterior values are zeroed
  CHECK(dw.at(0, 0, 0) == 0.0);
}
