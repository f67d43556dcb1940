#pragma once

#include <utility>

#include "lgt/calculus.hpp"
#include "lgt/field.hpp"

namespace lgt {

/// Shuffle-antisymmetrized pointwise bracket of algebra-valued forms:
///   [a ^ b]_L = sum over splits L = J|K of sign(J,K) [a_J, b_K].
/// Graded antisymmetry [a^b] = -(-1)^{kl} [b^a] holds exactly.
FormField bracket_wedge(const FormField& a, const FormField& b);

/// F = dA + 1/2 [A ^ A] for a connection 1-form A.
FormField curvature(const FormField& A);

/// (dh) h^{-1} as an algebra-valued 1-form, computed per axis from the
/// principal logs of the one-step relative elements,
///   mu_a(x) = [log(h(x+e_a) h(x)^{-1}) + log(h(x) h(x-e_a)^{-1})] / (2 h_a),
/// so each log stays on its principal branch and the result is exactly
/// algebra-valued. For u1 this is the exact discrete gradient of any phase
/// function whose neighbor increments stay below pi, which keeps Abelian
/// gauge shifts exactly closed.
struct GroupDerivative {
  FormField form;
  /// Largest one-step rotation angle divided by pi; values near 1 mean the
  /// grid is too coarse to resolve the group field (the principal branch
  /// is about to be crossed). Reported, not fatal.
  double max_step_fraction = 0.0;
};
GroupDerivative group_derivative_term(const GroupField& h);

/// A |-> Ad_{h^-1}(A + (dh) h^{-1}), pointwise.
FormField gauge_transform_connection(const FormField& A, const GroupField& h);

/// F |-> Ad_{h^-1} F, pointwise.
FormField gauge_transform_curvature(const FormField& F, const GroupField& h);

/// xi |-> (xi, -1/2 [xi ^ xi]) for a 1-form xi.
std::pair<FormField, FormField> phi_map(const FormField& xi);

}  // namespace lgt
