#include "lgt/gauge.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lgt {

FormField bracket_wedge(const FormField& a, const FormField& b) {
  if (!(a.chart() == b.chart()) || a.algebra().kind() != b.algebra().kind())
    throw std::invalid_argument("bracket_wedge: chart or algebra mismatch");
  const int dim = a.chart().dim();
  if (a.degree() + b.degree() > dim)
    throw std::invalid_argument("bracket_wedge: degree overflow");
  FormField out(a.chart(), a.algebra(), a.degree() + b.degree(),
                std::max(a.margin(), b.margin()));
  if (a.algebra().kind() == AlgebraKind::u1) return out;  // Abelian: zero

  const auto& terms = shuffle_terms(dim, a.degree(), b.degree());
  const std::int64_t n = a.sites();
  const int m = a.algebra_dim();
  std::array<double, 3> va{}, vb{}, vc{};
  for (const auto& t : terms) {
    for (std::int64_t s = 0; s < n; ++s) {
      for (int x = 0; x < m; ++x) {
        va[x] = a.at(s, t.left, x);
        vb[x] = b.at(s, t.right, x);
      }
      a.algebra().bracket(va, vb, vc);
      for (int x = 0; x < m; ++x) out.at(s, t.out, x) += t.sign * vc[x];
    }
  }
  out.clear_exterior();
  return out;
}

FormField curvature(const FormField& A) {
  if (A.degree() != 1) throw std::invalid_argument("curvature expects a 1-form");
  FormField F = exterior_derivative(A);
  if (A.algebra().kind() != AlgebraKind::u1) {
    FormField q = bracket_wedge(A, A);
    F.axpy(0.5, q);
  }
  return F;
}

GroupDerivative group_derivative_term(const GroupField& h) {
  const LatticeChart& chart = h.chart();
  const LieAlgebra& alg = LieAlgebra::get(h.kind());
  const int out_margin =
      chart.boundary() == Boundary::periodic ? 0 : h.margin() + 1;
  GroupDerivative result{FormField(chart, alg, 1, out_margin), 0.0};
  FormField& mu = result.form;
  std::array<double, 3> lp{}, lm{};
  const std::int64_t n = chart.site_count();
  for (int axis = 0; axis < chart.dim(); ++axis) {
    const double inv2h = 1.0 / (2.0 * chart.spacings()[axis]);
    for (std::int64_t s = 0; s < n; ++s) {
      const std::int64_t up = chart.neighbor(s, axis, +1);
      const std::int64_t dn = chart.neighbor(s, axis, -1);
      if (up < 0 || dn < 0) continue;
      const GroupElement inv = h.at(s).inverse();
      const GroupElement step_up = h.at(up) * inv;
      const GroupElement step_dn = h.at(s) * h.at(dn).inverse();
      step_up.log(lp);
      step_dn.log(lm);
      result.max_step_fraction =
          std::max({result.max_step_fraction,
                    step_up.log_norm() / 3.141592653589793,
                    step_dn.log_norm() / 3.141592653589793});
      for (int x = 0; x < alg.dim(); ++x)
        mu.at(s, axis, x) = inv2h * (lp[x] + lm[x]);
    }
  }
  mu.clear_exterior();
  return result;
}

FormField gauge_transform_connection(const FormField& A, const GroupField& h) {
  if (A.degree() != 1) throw std::invalid_argument("expected a connection 1-form");
  if (!(A.chart() == h.chart()) || A.algebra().kind() != h.kind())
    throw std::invalid_argument("gauge transform: chart or algebra mismatch");
  GroupDerivative gd = group_derivative_term(h);
  FormField out = A + gd.form;
  if (A.algebra().kind() == AlgebraKind::u1) return out;  // Ad is trivial
  std::array<double, 3> v{}, w{};
  const std::int64_t n = out.sites();
  for (std::int64_t s = 0; s < n; ++s) {
    const GroupElement inv = h.at(s).inverse();
    for (int c = 0; c < out.components(); ++c) {
      for (int x = 0; x < 3; ++x) v[x] = out.at(s, c, x);
      inv.adjoint(v, w);
      for (int x = 0; x < 3; ++x) out.at(s, c, x) = w[x];
    }
  }
  return out;
}

FormField gauge_transform_curvature(const FormField& F, const GroupField& h) {
  if (!(F.chart() == h.chart()) || F.algebra().kind() != h.kind())
    throw std::invalid_argument("gauge transform: chart or algebra mismatch");
  FormField out = F;
  if (F.algebra().kind() == AlgebraKind::u1) return out;
  std::array<double, 3> v{}, w{};
  const std::int64_t n = out.sites();
  for (std::int64_t s = 0; s < n; ++s) {
    const GroupElement inv = h.at(s).inverse();
    for (int c = 0; c < out.components(); ++c) {
      for (int x = 0; x < 3; ++x) v[x] = out.at(s, c, x);
      inv.adjoint(v, w);
      for (int x = 0; x < 3; ++x) out.at(s, c, x) = w[x];
    }
  }
  return out;
}

std::pair<FormField, FormField> phi_map(const FormField& xi) {
  if (xi.degree() != 1) throw std::invalid_argument("phi_map expects a 1-form");
  FormField skew = bracket_wedge(xi, xi);
  skew *= -0.5;
  return {xi, std::move(skew)};
}

}  // namespace lgt
