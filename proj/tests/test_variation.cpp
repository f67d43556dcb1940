#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lgt/suites.hpp"
#include "lgt/synth.hpp"
#include "lgt/variation.hpp"

using namespace lgt;

TEST_CASE("numeric gradient: critical point, linearity, oracle agreement") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::maxwell(chart);

  FormField zero(chart, LieAlgebra::u1(), 1);
  CHECK(linf_norm(numeric_action_gradient(T, zero, 1e-5)) <= 1e-9);

  std::mt19937_64 rng(3);
  FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 0.5);
  FormField B = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 0.5);
  FormField gA = numeric_action_gradient(T, A);
  FormField gB = numeric_action_gradient(T, B);
  FormField gAB = numeric_action_gradient(T, A + B);
  FormField sum = gA + gB;
  CHECK(linf_distance(gAB, sum) <= 1e-7);

  FormField exact = analytic_action_gradient(T, A);
  CHECK(linf_distance(gA, exact) / (1e-30 + linf_norm(exact)) <= 1e-8);
  CHECK_THROWS_AS(numeric_action_gradient(T, A, -1.0), std::invalid_argument);
}

TEST_CASE("analytic gradient equals twice the reduced residual") {
  std::mt19937_64 rng(5);
  {
    LatticeChart chart = calculus_chart();
    const TheorySpec T = TheorySpec::maxwell(chart);
    FormField A(chart, LieAlgebra::u1(), 1);
    std::uniform_real_distribution<double> u(-1, 1);
    for (double& v : A.raw()) v = u(rng);
    FormField G = analytic_action_gradient(T, A);
    FormField R = maxwell_residual(field_strength(T, A));
    G.axpy(-2.0, R);
    CHECK(linf_norm(G) <= 1e-12);
    CHECK(linf_norm(analytic_action_gradient(T, FormField(chart, LieAlgebra::u1(), 1))) ==
          0.0);
  }
  {
    LatticeChart chart = covariance_chart(6);
    const TheorySpec T = TheorySpec::yang_mills(chart);
    FormField A(chart, LieAlgebra::su2(), 1);
    std::uniform_real_distribution<double> u(-1, 1);
    for (double& v : A.raw()) v = u(rng);
    FormField G = analytic_action_gradient(T, A);
    FormField R = ym_residual(A);
    G.axpy(-2.0, R);
    CHECK(linf_norm(G) <= 1e-12);
  }
}

TEST_CASE("reduction equivalence check reports a vanishing difference") {
  std::mt19937_64 rng(7);
  LatticeChart chart = calculus_chart();
  const TheorySpec T = TheorySpec::maxwell(chart);
  FormField A = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 3, 1.0);
  ResidualReport rep = reduction_equivalence_check(T, A);
  CHECK(rep.all_pass());
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[2].linf <= 1e-12 * (1 + rep.rows[0].linf));

  FormField zero(chart, LieAlgebra::u1(), 1);
  ResidualReport rz = reduction_equivalence_check(T, zero);
  CHECK(rz.rows[0].linf == 0.0);
  CHECK(rz.rows[1].linf == 0.0);
}

TEST_CASE("stability bound and parameter validation") {
  LatticeChart chart = solver_chart(8);
  CHECK(stability_step_bound(chart) == doctest::Approx(0.4 / 12.0));
  const TheorySpec T = TheorySpec::maxwell(chart);
  FormField A0(chart, LieAlgebra::u1(), 1);

  FlowParams bad;
  bad.step = 1.0;  // far beyond the bound
  CHECK_THROWS_AS(gradient_flow_solve(T, A0, bad), std::invalid_argument);

  LatticeChart lor({4, 4, 4, 4}, {1, 1, 1, 1}, Boundary::periodic,
                   MetricSignature::lorentzian(4));
  CHECK_THROWS_AS(
      gradient_flow_solve(TheorySpec::maxwell(lor), FormField(lor, LieAlgebra::u1(), 1),
                          FlowParams{}),
      std::invalid_argument);
}

TEST_CASE("gradient flow: immediate return at zero, u1 convergence, monotone") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::maxwell(chart);
  FormField zero(chart, LieAlgebra::u1(), 1);
  auto [Az, tz] = gradient_flow_solve(T, zero, FlowParams{});
  CHECK(tz.converged);
  CHECK(tz.iterations == 0);

  std::mt19937_64 rng(11);
  FormField A0 = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 0.2);
  FlowParams p;
  p.residual_tol = 1e-8;
  auto [A, trace] = gradient_flow_solve(T, A0, p);
  CHECK(trace.converged);
  CHECK(linf_norm(maxwell_residual(field_strength(T, A))) <= 1e-8);
  for (size_t i = 1; i < trace.objective.size(); ++i)
    CHECK(trace.objective[i] <= trace.objective[i - 1] + 1e-13);
  // independent finite-difference confirmation at the solution
  CHECK(linf_norm(numeric_action_gradient(T, A)) <= 10 * p.residual_tol);
}

TEST_CASE("u1 flow commutes with abelian gauge shifts") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::maxwell(chart);
  std::mt19937_64 rng(13);
  FormField A0 = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 0.2);
  FormField chi = random_smooth_form(rng, chart, 0, AlgebraKind::u1, 2, 0.5);
  FormField A0s = A0 + exterior_derivative(chi);

  FlowParams p;
  p.max_iters = 40;
  p.residual_tol = 1e-14;  // run the full budget
  auto [A1, t1] = gradient_flow_solve(T, A0, p);
  auto [A2, t2] = gradient_flow_solve(T, A0s, p);
  CHECK(linf_distance(field_strength(T, A1), field_strength(T, A2)) <= 1e-10);
}

TEST_CASE("su2 flow at small size converges with a monotone objective") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::yang_mills(chart);
  std::mt19937_64 rng(17);
  FormField A0 = random_smooth_form(rng, chart, 1, AlgebraKind::su2, 2, 0.1);
  FlowParams p;
  p.residual_tol = 1e-5;
  auto [A, trace] = gradient_flow_solve(T, A0, p);
  CHECK(trace.converged);
  for (size_t i = 1; i < trace.objective.size(); ++i)
    CHECK(trace.objective[i] <= trace.objective[i - 1] + 1e-13);
  CHECK(linf_norm(ym_residual(A)) <= 1e-5);
}

TEST_CASE("gauge penalty adds a descent direction without breaking descent") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::maxwell(chart);
  std::mt19937_64 rng(19);
  FormField A0 = random_smooth_form(rng, chart, 1, AlgebraKind::u1, 2, 0.2);
  FlowParams p;
  p.gauge_penalty = 0.5;
  p.max_iters = 200;
  p.residual_tol = 1e-9;
  auto [A, trace] = gradient_flow_solve(T, A0, p);
  for (size_t i = 1; i < trace.objective.size(); ++i)
    CHECK(trace.objective[i] <= trace.objective[i - 1] + 1e-13);
}

TEST_CASE("flow trace serializes the documented csv columns") {
  FlowTrace t;
  t.objective = {1.0, 0.5};
  t.residual_l2 = {0.3, 0.2};
  t.residual_linf = {0.1, 0.05};
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("iter,action,residual_L2,residual_Linf\n", 0) == 0);
  CHECK(csv.find("1,0.5,0.2,0.05\n") != std::string::npos);
}

TEST_CASE("flow aborts with a divergence diagnostic on a blowup") {
  LatticeChart chart = solver_chart(6);
  const TheorySpec T = TheorySpec::yang_mills(chart);
  std::mt19937_64 rng(23);
  // far outside the stability region of the quartic terms
  FormField A0 = random_smooth_form(rng, chart, 1, AlgebraKind::su2, 2, 40.0);
  FlowParams p;
  p.max_iters = 5000;
  auto [A, trace] = gradient_flow_solve(T, A0, p);
  CHECK(trace.diverged);
  CHECK(!trace.converged);
  CHECK(!trace.diagnostic.empty());
}
