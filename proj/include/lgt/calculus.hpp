#pragma once

#include "lgt/field.hpp"

namespace lgt {

/// Central difference (f(x+h) - f(x-h)) / (2 h_axis) applied componentwise.
/// Periodic charts wrap; clamped charts grow the margin by one layer.
FormField partial_derivative(const FormField& f, int axis);

/// (d w)_{m0..mk} = sum_i (-1)^i d_{m_i} w_{m0..^m_i..mk} with commuting
/// central-difference stencils, so d(d w) = 0 holds to roundoff.
/// At top degree the result is the degenerate zero field.
FormField exterior_derivative(const FormField& w);

/// (*w)_{I^c} = sign(I, I^c) * (prod_{m in I} g^{mm}) * w_I.
/// Satisfies a ^ *b = g(a,b) v_g and ** = (-1)^{k(dim-k)} parity(g).
FormField hodge_star(const FormField& w);

/// Inverse of hodge_star: hodge_star(hodge_star_inverse(w)) == w.
FormField hodge_star_inverse(const FormField& w);

/// Metric adjoint of the exterior derivative: <d a, b> = <a, codifferential(b)>
/// holds identically on periodic charts. Local stencil:
///   (delta b)_I = -sum_{m not in I} (-1)^{pos(m, I+m)} g^{mm} d_m b_{I+m}.
FormField codifferential(const FormField& w);

/// Wedge product of scalar-valued forms (algebra dimension 1 on both sides),
/// as the shuffle-antisymmetrized sum over canonical components.
FormField wedge(const FormField& a, const FormField& b);

/// Metric inner product: sum over sites of
///   sum_I (prod_{m in I} g^{mm}) K(a_I, b_I) * cell volume,
/// restricted to the common valid interior. Indefinite for Lorentzian
/// signatures; use l2_norm for report norms.
double inner_product(const FormField& a, const FormField& b);

/// Pointwise metric-and-form contraction g(a,b)K as a scalar 0-field.
FormField pointwise_pairing(const FormField& a, const FormField& b);

}  // namespace lgt
