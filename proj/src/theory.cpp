#include "lgt/theory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::string to_string(TheoryKind k) {
  switch (k) {
    case TheoryKind::maxwell: return "maxwell";
    case TheoryKind::kform_em: return "kform_em";
    case TheoryKind::yang_mills: return "yang_mills";
    case TheoryKind::broken_product: return "broken_product";
  }
  return "?";
}

TheorySpec TheorySpec::maxwell(LatticeChart chart) {
  return TheorySpec{TheoryKind::maxwell, std::move(chart), 1};
}

TheorySpec TheorySpec::kform_em(LatticeChart chart, int k) {
  if (k < 1 || k > chart.dim() - 1)
    throw std::invalid_argument("k-form degree must satisfy 1 <= k <= dim-1");
  return TheorySpec{TheoryKind::kform_em, std::move(chart), k};
}

TheorySpec TheorySpec::yang_mills(LatticeChart chart) {
  return TheorySpec{TheoryKind::yang_mills, std::move(chart), 1};
}

std::string TheorySpec::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == TheoryKind::kform_em) os << "(k=" << potential_degree << ")";
  os << "/" << algebra().name();
  // the algebra form normalization scales the action without moving its
  // critical points; recorded so reports are self-describing
  if (kind == TheoryKind::yang_mills) os << " [form = -Killing/2]";
  return os.str();
}

namespace {
void require_potential(const TheorySpec& T, const FormField& A) {
  if (A.degree() != T.potential_degree)
    throw std::invalid_argument("field degree does not match the theory");
  if (A.algebra().kind() != T.algebra().kind())
    throw std::invalid_argument("field algebra does not match the theory");
  if (!(A.chart() == T.chart))
    throw std::invalid_argument("field chart does not match the theory");
}
}  // namespace

FormField field_strength(const TheorySpec& T, const FormField& A) {
  require_potential(T, A);
  if (T.kind == TheoryKind::yang_mills) return curvature(A);
  return exterior_derivative(A);
}

FormField lagrangian_density(const TheorySpec& T, const FormField& A) {
  FormField F = field_strength(T, A);
  return pointwise_pairing(F, F);
}

double action(const TheorySpec& T, const FormField& A) {
  FormField F = field_strength(T, A);
  return inner_product(F, F);
}

FormField maxwell_residual(const FormField& F) {
  if (F.algebra().kind() != AlgebraKind::u1)
    throw std::invalid_argument("maxwell_residual expects an Abelian field; use ym_residual");
  return codifferential(F);
}

FormField ym_residual(const FormField& A) {
  if (A.degree() != 1) throw std::invalid_argument("ym_residual expects a 1-form");
  FormField F = curvature(A);
  FormField res = codifferential(F);
  if (A.algebra().kind() != AlgebraKind::u1) {
    FormField coupling = hodge_star_inverse(bracket_wedge(A, hodge_star(F)));
    res += coupling;
  }
  return res;
}

FormField bianchi_residual(const FormField& A) {
  if (A.degree() != 1) throw std::invalid_argument("bianchi_residual expects a 1-form");
  FormField F = curvature(A);
  FormField dF = exterior_derivative(F);
  if (dF.degenerate()) return dF;  // dimension 2: the 3-form space is zero
  if (A.algebra().kind() != AlgebraKind::u1) {
    FormField t = bracket_wedge(A, F);
    dF += t;
  }
  return dF;
}

FormField delta_l_delta_F(const TheorySpec& T, const FormField& F) {
  if (F.degree() != T.curvature_degree())
    throw std::invalid_argument("field degree does not match the theory's curvature");
  FormField out = F;
  const auto& table = F.table();
  const std::int64_t n = F.sites();
  for (int c = 0; c < F.components(); ++c) {
    const double w = 2.0 * metric_weight(F.chart(), table.axes(c));
    for (int a = 0; a < F.algebra_dim(); ++a) {
      double* p = out.plane(c, a);
      for (std::int64_t s = 0; s < n; ++s) p[s] *= w;
    }
  }
  return out;
}

/// Contraction J^m = sum over slot components of Pi^{[m I]} slot_I, summed
/// over algebra coordinates. Pi has degree slot+1; the output is a scalar-
/// valued 1-form (a raised current).
FormField contract_symmetry_current(const FormField& Pi, const FormField& slot) {
  const LatticeChart& chart = Pi.chart();
  const int dim = chart.dim();
  FormField J(chart, LieAlgebra::u1(), 1, std::max(Pi.margin(), slot.margin()));
  const auto& tslot = slot.table();
  const auto& tpi = Pi.table();
  const std::int64_t n = Pi.sites();
  for (int mu = 0; mu < dim; ++mu) {
    double* pj = J.plane(mu, 0);
    for (int i = 0; i < tslot.count(); ++i) {
      const auto& I = tslot.axes(i);
      if (std::find(I.begin(), I.end(), mu) != I.end()) continue;
      std::vector<int> merged(I);
      const int pos = MultiIndexTable::insertion_position(merged, mu);
      merged.insert(merged.begin() + pos, mu);
      const int src = tpi.index_of(merged);
      const double sign = (pos % 2 == 0) ? 1.0 : -1.0;
      for (int a = 0; a < Pi.algebra_dim(); ++a) {
        const double* pp = Pi.plane(src, a);
        const double* ps = slot.plane(i, a);
        for (std::int64_t s = 0; s < n; ++s) pj[s] += sign * pp[s] * ps[s];
      }
    }
  }
  J.clear_exterior();
  return J;
}

FormField vector_divergence(const FormField& J) {
  FormField div(J.chart(), LieAlgebra::u1(), 0,
                J.chart().boundary() == Boundary::periodic ? 0 : J.margin() + 1);
  for (int mu = 0; mu < J.chart().dim(); ++mu) {
    FormField comp(J.chart(), LieAlgebra::u1(), 0, J.margin());
    const double* src = J.plane(mu, 0);
    double* dst = comp.plane(0, 0);
    std::copy(src, src + J.sites(), dst);
    FormField d = partial_derivative(comp, mu);
    div += d;
  }
  div.clear_exterior();
  return div;
}

FormField noether_current(const TheorySpec& T, const FormField& A,
                          const FormField& xi, double closed_tol) {
  require_potential(T, A);
  FormField F = field_strength(T, A);
  FormField Pi = delta_l_delta_F(T, F);
  if (T.kind == TheoryKind::yang_mills) {
    if (xi.degree() != 0 || xi.algebra().kind() != AlgebraKind::su2)
      throw std::invalid_argument("yang-mills symmetry parameter must be an su2 0-form");
    FormField slot = exterior_derivative(xi);
    FormField comm = bracket_wedge(A, xi);
    slot += comm;
    return contract_symmetry_current(Pi, slot);
  }
  if (xi.degree() != T.potential_degree || xi.algebra().kind() != AlgebraKind::u1)
    throw std::invalid_argument("symmetry parameter degree/algebra mismatch");
  FormField dxi = exterior_derivative(xi);
  const double closure = linf_norm(dxi);
  if (closure > closed_tol) {
    std::ostringstream os;
    os << "precondition violation: gauge parameter is not closed (|d xi|_inf = "
       << closure << " > " << closed_tol << ")";
    throw std::invalid_argument(os.str());
  }
  return contract_symmetry_current(Pi, xi);
}

FormField noether_divergence(const TheorySpec& T, const FormField& A,
                             const FormField& xi, double closed_tol) {
  return vector_divergence(noether_current(T, A, xi, closed_tol));
}

double curvature_coadjoint_residual(const FormField& F) {
  const LieAlgebra& alg = F.algebra();
  const auto& table = F.table();
  const std::int64_t n = F.sites();
  const int m = alg.dim();
  std::vector<double> xi(m), mu(m), out(m), acc(m);
  double worst = 0.0;
  for (std::int64_t s = 0; s < n; ++s) {
    if (!F.chart().in_interior(s, F.margin())) continue;
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int c = 0; c < F.components(); ++c) {
      const double w = 2.0 * metric_weight(F.chart(), table.axes(c));
      for (int a = 0; a < m; ++a) {
        xi[a] = F.at(s, c, a);
        mu[a] = w * F.at(s, c, a);
      }
      alg.coadjoint(xi, mu, out);
      for (int a = 0; a < m; ++a) acc[a] += out[a];
    }
    for (int a = 0; a < m; ++a) worst = std::max(worst, std::abs(acc[a]));
  }
  return worst;
}

ResidualReport broken_product_residuals(const FormField& A_su2,
                                        const FormField& A_u1, double tol_su2,
                                        double tol_u1) {
  if (!(A_su2.chart() == A_u1.chart()))
    throw std::invalid_argument("broken product fields must share a chart");
  if (A_su2.algebra().kind() != AlgebraKind::su2 ||
      A_u1.algebra().kind() != AlgebraKind::u1)
    throw std::invalid_argument("expected (su2, u1) potentials");

  ResidualReport rep;
  rep.title = "broken_product";
  rep.chart = A_su2.chart().describe();
  rep.theory = "su2 x u1, decoupled flat quotient connection";

  FormField rn = ym_residual(A_su2);
  FormField r1 = maxwell_residual(exterior_derivative(A_u1));
  if (tol_su2 >= 0.0)
    rep.check("su2_residual", l2_norm(rn), linf_norm(rn), tol_su2);
  else
    rep.info("su2_residual", l2_norm(rn), linf_norm(rn));
  if (tol_u1 >= 0.0)
    rep.check("u1_residual", l2_norm(r1), linf_norm(r1), tol_u1);
  else
    rep.info("u1_residual", l2_norm(r1), linf_norm(r1));
  return rep;
}

}  // namespace lgt
