#pragma once

#include <string>

#include "lgt/gauge.hpp"
#include "lgt/report.hpp"

namespace lgt {

enum class TheoryKind { maxwell, kform_em, yang_mills, broken_product };

std::string to_string(TheoryKind k);

/// A concrete field theory on a chart: which quadratic curvature Lagrangian,
/// over which algebra, and (for k-form electromagnetism) the potential degree.
struct TheorySpec {
  TheoryKind kind = TheoryKind::maxwell;
  LatticeChart chart;
  int potential_degree = 1;  // k for kform_em, 1 otherwise

  static TheorySpec maxwell(LatticeChart chart);
  static TheorySpec kform_em(LatticeChart chart, int k);
  static TheorySpec yang_mills(LatticeChart chart);

  const LieAlgebra& algebra() const {
    return kind == TheoryKind::yang_mills ? LieAlgebra::su2() : LieAlgebra::u1();
  }
  int curvature_degree() const { return potential_degree + 1; }
  std::string describe() const;
};

/// Field strength of the theory's potential: dA for the Abelian cases,
/// dA + 1/2 [A^A] for Yang-Mills.
FormField field_strength(const TheorySpec& T, const FormField& A);

/// Pointwise density g(F,F)K as a scalar 0-field (interior-only on clamped
/// charts).
FormField lagrangian_density(const TheorySpec& T, const FormField& A);

/// Sum of the density times cell volume over the valid interior.
double action(const TheorySpec& T, const FormField& A);

/// delta F for Abelian field strengths; the residual of d*F = 0. Rejects
/// non-Abelian input.
FormField maxwell_residual(const FormField& F);

/// delta F + star^-1 [A ^ star F] with F the curvature of A. Specializes to
/// maxwell_residual(curvature(A)) for u1, and equals half the exact gradient
/// of the discrete action on periodic charts.
FormField ym_residual(const FormField& A);

/// dF + [A ^ F], F = curvature(A). Degenerate zero field in dimension 2.
FormField bianchi_residual(const FormField& A);

/// Index-raised 2F: components 2 (prod g^{mm}) F_I with the algebra index
/// lowered by the (orthonormal) invariant form.
FormField delta_l_delta_F(const TheorySpec& T, const FormField& F);

/// Noether current J^m = contraction of delta_l_delta_F with the symmetry
/// slot on the trailing indices. Abelian theories take a closed potential-
/// degree form xi (checked to closed_tol); Yang-Mills takes an algebra-valued
/// 0-form and uses the covariant derivative d xi + [A ^ xi].
FormField noether_current(const TheorySpec& T, const FormField& A,
                          const FormField& xi, double closed_tol = 1e-10);

/// Plain divergence sum_m d_m J^m of the current, as a scalar 0-field.
FormField noether_divergence(const TheorySpec& T, const FormField& A,
                             const FormField& xi, double closed_tol = 1e-10);

/// Building blocks of the current, exposed so batch checks over many
/// parameters can reuse the field-strength contraction:
/// J^m = sum_I Pi^{[m I]} slot_I (algebra coordinates contracted).
FormField contract_symmetry_current(const FormField& Pi, const FormField& slot);
/// sum_m d_m J^m for a raised scalar-valued 1-form.
FormField vector_divergence(const FormField& J);

/// Pointwise sup of ad*_F(delta l / delta F); identically zero for the
/// quadratic density by invariance of the form.
double curvature_coadjoint_residual(const FormField& F);

/// Decoupled product-group instance: with the flat trivial connection on the
/// quotient the coupling vanishes, so the su2 and u1 residuals are evaluated
/// independently and reported jointly. Negative tolerances mean
/// informational rows.
ResidualReport broken_product_residuals(const FormField& A_su2,
                                        const FormField& A_u1,
                                        double tol_su2 = -1.0,
                                        double tol_u1 = -1.0);

}  // namespace lgt
