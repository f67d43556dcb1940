#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgt/gauge.hpp"

namespace lgt {

/// Closed lattice path: a start site plus axis steps like "+x+y-x-y".
/// Letters x,y,z,w (or digits 0..3) name axes. Each step spans two lattice
/// sites, so the transport samples the potential at the on-lattice midpoint;
/// this pairing telescopes exactly against central-difference gradients.
struct LoopSpec {
  std::vector<int> origin;
  std::vector<std::pair<int, int>> steps;  // (axis, +1/-1)

  static LoopSpec parse(std::vector<int> origin, const std::string& steps);
};

/// Radial homotopy potential of a closed Abelian 2-form on a clamped
/// (contractible) chart:
///   A_m(x) = sum_n (x-x0)^n  \int_0^1 t F_{n m}(x0 + t (x-x0)) dt,
/// with composite-Simpson quadrature and multilinear sampling of F.
/// Refuses fields with |dF|_inf above compat_tol.
FormField poincare_reconstruct(const FormField& F, const std::vector<int>& origin,
                               double compat_tol = 1e-10);

/// Thrown when the compatibility condition dF = 0 fails.
struct CompatibilityError : std::runtime_error {
  explicit CompatibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ordered product over loop steps of exp(-A_axis(midpoint) * step * dir),
/// later steps composing on the left.
GroupElement holonomy(const FormField& A, const LoopSpec& loop);

/// |curvature(A)|_inf.
double flatness_residual(const FormField& A);

}  // namespace lgt
