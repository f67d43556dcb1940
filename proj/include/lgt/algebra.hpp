#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace lgt {

enum class AlgebraKind { u1, su2 };

std::string to_string(AlgebraKind k);
AlgebraKind algebra_from_string(std::string_view s);

/// Finite-dimensional Lie algebra with structure constants and an
/// Ad-invariant positive bilinear form. Two instances exist: u(1) with the
/// 1x1 identity form, and su(2) in the basis with [e_i, e_j] = eps_ijk e_k
/// and form delta_ij (minus the Killing form over 2).
class LieAlgebra {
 public:
  static const LieAlgebra& u1();
  static const LieAlgebra& su2();
  static const LieAlgebra& get(AlgebraKind k);

  AlgebraKind kind() const { return kind_; }
  int dim() const { return m_; }
  std::string name() const { return to_string(kind_); }

  double structure(int c, int a, int b) const { return c_[(c * 3 + a) * 3 + b]; }
  double form(int a, int b) const { return a == b ? 1.0 : 0.0; }

  /// out = [a, b]
  void bracket(std::span<const double> a, std::span<const double> b,
               std::span<double> out) const;

  /// K(a, b)
  double pair(std::span<const double> a, std::span<const double> b) const;

  /// Coadjoint action on dual coordinates: <out, eta> = -<mu, [xi, eta]>.
  void coadjoint(std::span<const double> xi, std::span<const double> mu,
                 std::span<double> out) const;

 private:
  explicit LieAlgebra(AlgebraKind k);
  AlgebraKind kind_;
  int m_;
  std::array<double, 27> c_{};  // c^gamma_{alpha beta}, zero-padded
};

/// Group element: u(1) stores an angle (reduced mod 2pi), su(2) a unit
/// quaternion (w, x, y, z); products renormalize.
struct GroupElement {
  AlgebraKind kind = AlgebraKind::u1;
  std::array<double, 4> q{0.0, 0.0, 0.0, 0.0};  // u1: q[0] = angle

  static GroupElement identity(AlgebraKind k);
  static GroupElement exp(const LieAlgebra& alg, std::span<const double> xi);

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

  /// Principal logarithm, written as algebra coordinates.
  void log(std::span<double> xi_out) const;
  /// Norm of the principal log (u1: |angle|; su2: rotation angle |xi|).
  double log_norm() const;

  /// out = Ad_g xi
  void adjoint(std::span<const double> xi, std::span<double> out) const;

  /// Max-norm distance to another element in the stored coordinates.
  double distance(const GroupElement& rhs) const;
};

}  // namespace lgt
