#include "lgt/variation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lgt {

double stability_step_bound(const LatticeChart& chart) {
  double s = 0.0;
  for (double h : chart.spacings()) s += 4.0 / (h * h);
  return 0.4 / s;
}

FormField numeric_action_gradient(const TheorySpec& T, const FormField& A,
                                  double fd_step) {
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd step must be positive");
  FormField grad = FormField(A.chart(), A.algebra(), A.degree(), A.margin());
  FormField work = A;
  const double inv = 1.0 / (2.0 * fd_step * A.chart().cell_volume());
  const std::int64_t n = A.sites();
  for (int c = 0; c < A.components(); ++c) {
    for (int a = 0; a < A.algebra_dim(); ++a) {
      double* p = work.plane(c, a);
      double* g = grad.plane(c, a);
      for (std::int64_t s = 0; s < n; ++s) {
        const double saved = p[s];
        p[s] = saved + fd_step;
        const double sp = action(T, work);
        p[s] = saved - fd_step;
        const double sm = action(T, work);
        p[s] = saved;
        g[s] = (sp - sm) * inv;
      }
    }
  }
  return grad;
}

FormField analytic_action_gradient(const TheorySpec& T, const FormField& A) {
  FormField grad = T.kind == TheoryKind::yang_mills
                       ? ym_residual(A)
                       : maxwell_residual(field_strength(T, A));
  grad *= 2.0;
  return grad;
}

ResidualReport reduction_equivalence_check(const TheorySpec& T, const FormField& A) {
  ResidualReport rep;
  rep.title = "reduction_equivalence";
  rep.chart = T.chart.describe();
  rep.theory = T.describe();

  FormField grad = analytic_action_gradient(T, A);
  FormField reduced = T.kind == TheoryKind::yang_mills
                          ? ym_residual(A)
                          : maxwell_residual(field_strength(T, A));
  FormField diff = grad;
  diff.axpy(-2.0, reduced);

  const double gl = linf_norm(grad);
  rep.info("euler_lagrange_gradient", l2_norm(grad), gl);
  rep.info("reduced_residual", l2_norm(reduced), linf_norm(reduced));
  rep.check("gradient_minus_twice_residual", l2_norm(diff), linf_norm(diff),
            1e-12 * (1.0 + gl));
  return rep;
}

std::string FlowTrace::to_csv() const {
  std::ostringstream os;
  os << "iter,action,residual_L2,residual_Linf\n";
  for (size_t i = 0; i < objective.size(); ++i) {
    os << i << "," << format_double(objective[i]) << ","
       << format_double(residual_l2[i]) << "," << format_double(residual_linf[i])
       << "\n";
  }
  return os.str();
}

std::pair<FormField, FlowTrace> gradient_flow_solve(const TheorySpec& T,
                                                    const FormField& A0,
                                                    const FlowParams& params) {
  for (int s : T.chart.signature().diag)
    if (s != 1)
      throw std::invalid_argument("gradient flow requires a Euclidean signature");
  if (T.chart.boundary() != Boundary::periodic)
    throw std::invalid_argument("gradient flow requires a periodic chart");
  if (!(params.residual_tol > 0.0))
    throw std::invalid_argument("residual tolerance must be positive");
  if (params.gauge_penalty < 0.0)
    throw std::invalid_argument("gauge penalty must be nonnegative");

  const double bound = stability_step_bound(T.chart);
  double step = params.step;
  if (step <= 0.0)
    step = bound;
  else if (step > bound) {
    std::ostringstream os;
    os << "step " << step << " exceeds the stability bound " << bound;
    throw std::invalid_argument(os.str());
  }

  FormField A = A0;
  FlowTrace trace;
  int rising = 0;
  double prev_obj = 0.0;

  auto reduced_residual = [&](const FormField& cur) {
    return T.kind == TheoryKind::yang_mills
               ? ym_residual(cur)
               : maxwell_residual(field_strength(T, cur));
  };

  for (int iter = 0; iter <= params.max_iters; ++iter) {
    FormField R = reduced_residual(A);
    double obj = action(T, A);
    if (params.gauge_penalty > 0.0) {
      FormField dA = codifferential(A);
      obj += params.gauge_penalty * inner_product(dA, dA);
    }
    const double rl2 = l2_norm(R);
    const double rli = linf_norm(R);
    trace.objective.push_back(obj);
    trace.residual_l2.push_back(rl2);
    trace.residual_linf.push_back(rli);
    trace.iterations = iter;

    if (!std::isfinite(obj) || !std::isfinite(rli)) {
      trace.diverged = true;
      trace.diagnostic = "non-finite objective or residual";
      break;
    }
    if (rli <= params.residual_tol) {
      trace.converged = true;
      break;
    }
    if (iter > 0 && obj > prev_obj) {
      if (++rising >= 10) {
        trace.diverged = true;
        std::ostringstream os;
        os << "objective increased for " << rising
           << " consecutive steps (last = " << obj << ")";
        trace.diagnostic = os.str();
        break;
      }
    } else {
      rising = 0;
    }
    prev_obj = obj;
    if (iter == params.max_iters) break;

    FormField G = R;
    G *= 2.0;
    if (params.gauge_penalty > 0.0) {
      FormField fix = exterior_derivative(codifferential(A));
      G.axpy(2.0 * params.gauge_penalty, fix);
    }
    A.axpy(-step, G);
  }
  return {std::move(A), std::move(trace)};
}

}  // namespace lgt
