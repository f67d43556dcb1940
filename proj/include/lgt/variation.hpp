#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lgt/theory.hpp"

namespace lgt {

struct FlowParams {
  double step = 0.0;  // <= 0 selects the stability bound automatically
  int max_iters = 50000;
  double residual_tol = 1e-6;
  double gauge_penalty = 0.0;  // lambda for the |delta A|^2 penalty
  std::uint64_t seed = 0;
};

/// Explicit-Euler stability bound 0.4 / sum_m (4 / h_m^2) for the quadratic
/// part of the flow.
double stability_step_bound(const LatticeChart& chart);

/// Central finite difference of the discrete action per site, component and
/// algebra coordinate, divided by the cell volume (density-normalized, so it
/// is directly comparable with analytic_action_gradient).
FormField numeric_action_gradient(const TheorySpec& T, const FormField& A,
                                  double fd_step = 1e-5);

/// Exact gradient of the discrete action on periodic charts:
/// 2 delta F for the Abelian theories, 2 (delta F + star^-1[A ^ star F]) for
/// Yang-Mills. Identical to twice the reduced residual by construction.
FormField analytic_action_gradient(const TheorySpec& T, const FormField& A);

/// Reports the unreduced Euler-Lagrange gradient norm, the reduced residual
/// norm, and their difference; the verdict requires the difference to vanish
/// to roundoff relative to the gradient scale.
ResidualReport reduction_equivalence_check(const TheorySpec& T, const FormField& A);

struct FlowTrace {
  std::vector<double> objective;      // action plus penalty when lambda > 0
  std::vector<double> residual_l2;
  std::vector<double> residual_linf;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
  std::string diagnostic;

  /// CSV with columns iter,action,residual_L2,residual_Linf.
  std::string to_csv() const;
};

/// First-order gradient flow A <- A - step (grad + lambda grad_penalty) on a
/// Euclidean periodic chart. Terminates when the reduced residual Linf drops
/// to residual_tol, at max_iters, or aborts after ten consecutive objective
/// increases.
std::pair<FormField, FlowTrace> gradient_flow_solve(const TheorySpec& T,
                                                    const FormField& A0,
                                                    const FlowParams& params);

}  // namespace lgt
