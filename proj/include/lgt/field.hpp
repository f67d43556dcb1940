#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lgt/algebra.hpp"
#include "lgt/lattice.hpp"

namespace lgt {

/// Lie-algebra-valued k-form sampled at grid sites. Storage is plane-major:
/// for each canonical multi-index component, for each algebra coordinate,
/// one row-major grid of doubles.
///
/// `margin()` counts boundary layers with no valid data on clamped charts
/// (derivative stencils shrink the valid region by one layer per
/// application); it is always 0 on periodic charts. Norms, inner products
/// and actions only see the valid interior.
class FormField {
 public:
  FormField(LatticeChart chart, const LieAlgebra& algebra, int degree,
            int margin = 0);

  static FormField zeros_like(const FormField& f) {
    return FormField(f.chart(), f.algebra(), f.degree(), f.margin());
  }

  const LatticeChart& chart() const { return chart_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  int degree() const { return degree_; }
  int margin() const { return margin_; }
  void set_margin(int m) { margin_ = m; }
  /// A field whose component space is zero-dimensional (e.g. the exterior
  /// derivative of a top-degree form).
  bool degenerate() const { return degenerate_; }
  void set_degenerate(bool v) { degenerate_ = v; }

  int components() const { return components_; }
  int algebra_dim() const { return algebra_->dim(); }
  std::int64_t sites() const { return chart_.site_count(); }
  const MultiIndexTable& table() const {
    return MultiIndexTable::get(chart_.dim(), degree_);
  }

  double* plane(int comp, int a) {
    return data_.data() + (static_cast<std::int64_t>(comp) * algebra_dim() + a) * sites();
  }
  const double* plane(int comp, int a) const {
    return data_.data() + (static_cast<std::int64_t>(comp) * algebra_dim() + a) * sites();
  }

  double& at(std::int64_t site, int comp, int a) { return plane(comp, a)[site]; }
  double at(std::int64_t site, int comp, int a) const { return plane(comp, a)[site]; }

  /// Algebra coordinates of one component at one site.
  void value(std::int64_t site, int comp, std::span<double> out) const {
    for (int a = 0; a < algebra_dim(); ++a) out[a] = at(site, comp, a);
  }
  void set_value(std::int64_t site, int comp, std::span<const double> v) {
    for (int a = 0; a < algebra_dim(); ++a) at(site, comp, a) = v[a];
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  FormField& operator+=(const FormField& rhs);
  FormField& operator-=(const FormField& rhs);
  FormField& operator*=(double s);
  /// this += s * rhs
  void axpy(double s, const FormField& rhs);

  /// Zeroes everything outside the valid interior (used after stencil ops
  /// on clamped charts so stale boundary values never leak into results).
  void clear_exterior();

  bool same_shape(const FormField& rhs) const;

 private:
  LatticeChart chart_;
  const LieAlgebra* algebra_;
  int degree_;
  int margin_;
  int components_;
  bool degenerate_ = false;
  std::vector<double> data_;
};

FormField operator+(FormField a, const FormField& b);
FormField operator-(FormField a, const FormField& b);
FormField operator*(double s, FormField a);

/// Max |value| over the valid interior.
double linf_norm(const FormField& f);
/// sqrt(cell volume * sum of squares) over the valid interior.
double l2_norm(const FormField& f);
/// Max |difference|; fields must share shape.
double linf_distance(const FormField& a, const FormField& b);

/// Group-valued 0-field.
class GroupField {
 public:
  GroupField(LatticeChart chart, AlgebraKind kind, int margin = 0);

  const LatticeChart& chart() const { return chart_; }
  AlgebraKind kind() const { return kind_; }
  int margin() const { return margin_; }
  std::int64_t sites() const { return chart_.site_count(); }

  GroupElement& at(std::int64_t site) { return data_[site]; }
  const GroupElement& at(std::int64_t site) const { return data_[site]; }

 private:
  LatticeChart chart_;
  AlgebraKind kind_;
  int margin_;
  std::vector<GroupElement> data_;
};

}  // namespace lgt
