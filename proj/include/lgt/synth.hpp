#pragma once

#include <random>
#include <vector>

#include "lgt/field.hpp"

namespace lgt {

/// One plane-wave term c * sin(k . x + phase).
struct WaveTerm {
  std::vector<double> wavevec;
  double phase = 0.0;
  double coeff = 0.0;
};

/// Smooth analytic form given as sums of plane-wave terms per component and
/// algebra coordinate. A spec is resolution-independent: sampling it on
/// successively refined charts of the same physical box yields the same
/// continuum field, which is what refinement sweeps need.
class WaveFormSpec {
 public:
  WaveFormSpec(int dim, int degree, AlgebraKind kind);

  int degree() const { return degree_; }
  AlgebraKind kind() const { return kind_; }
  std::vector<WaveTerm>& terms(int comp, int a);
  const std::vector<WaveTerm>& terms(int comp, int a) const;

  double value(int comp, int a, const std::vector<double>& x) const;
  double derivative(int comp, int a, int axis, const std::vector<double>& x) const;

  FormField sample(const LatticeChart& chart) const;
  /// Continuum exterior derivative, sampled exactly (an oracle field).
  FormField sample_exterior_derivative(const LatticeChart& chart) const;

  /// Random spec with integer modes up to `mode_cutoff` per axis on the
  /// physical box of `box_chart` (so it stays periodic on that box and all
  /// its refinements).
  static WaveFormSpec random(std::mt19937_64& rng, const LatticeChart& box_chart,
                             int degree, AlgebraKind kind, int n_modes,
                             double amplitude, int mode_cutoff = 2);

 private:
  int dim_, degree_, m_;
  AlgebraKind kind_ = AlgebraKind::u1;
  std::vector<std::vector<WaveTerm>> terms_;  // [comp * m + a]
};

/// Polynomial form, total degree <= 2 per term. Central differences are
/// exact on these fields, which makes them the exactness class of the
/// discretization (reconstruction round trips are exact to roundoff).
class PolyFormSpec {
 public:
  struct Term {
    std::vector<int> exponents;  // per axis, total <= 2
    double coeff = 0.0;
  };

  PolyFormSpec(int dim, int degree, AlgebraKind kind);
  AlgebraKind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::vector<Term>& terms(int comp, int a);

  double value(int comp, int a, const std::vector<double>& x) const;
  double derivative(int comp, int a, int axis, const std::vector<double>& x) const;

  FormField sample(const LatticeChart& chart) const;
  FormField sample_exterior_derivative(const LatticeChart& chart) const;

  static PolyFormSpec random(std::mt19937_64& rng, int dim, int degree,
                             AlgebraKind kind, double amplitude);

 private:
  int dim_, degree_, m_;
  AlgebraKind kind_ = AlgebraKind::u1;
  std::vector<std::vector<Term>> terms_;
};

/// Physical box lengths of a chart (periodic: N h; clamped: (N-1) h).
std::vector<double> box_lengths(const LatticeChart& chart);

/// A = amplitude * sin(k . x) dx^axis with k_a = 2 pi modes_a / L_a.
FormField plane_wave_potential(const LatticeChart& chart,
                               const std::vector<int>& modes, int axis,
                               double amplitude);
WaveFormSpec plane_wave_spec(const LatticeChart& chart, const std::vector<int>& modes,
                             int axis, double amplitude);

/// k . k with the chart metric and k . polarization; both zero for an
/// admissible Lorentzian wave.
struct WaveAdmissibility {
  double k_dot_k = 0.0;
  double k_dot_polarization = 0.0;
};
WaveAdmissibility plane_wave_admissibility(const LatticeChart& chart,
                                           const std::vector<int>& modes, int axis);

/// h(x) = exp(xi(x)) for an algebra-valued 0-form.
GroupField group_exponential(const FormField& xi);

/// Convenience one-off samplers.
FormField random_smooth_form(std::mt19937_64& rng, const LatticeChart& chart,
                             int degree, AlgebraKind kind, int n_modes,
                             double amplitude);
GroupField random_group_field(std::mt19937_64& rng, const LatticeChart& chart,
                              AlgebraKind kind, int n_modes, double amplitude);

}  // namespace lgt
