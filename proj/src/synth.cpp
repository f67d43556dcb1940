#include "lgt/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace lgt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

template <class Spec>
FormField sample_spec(const Spec& spec, const LatticeChart& chart, int degree) {
  FormField out(chart, LieAlgebra::get(spec.kind()), degree, 0);
  const int d = chart.dim();
  std::vector<int> coords(d);
  std::vector<double> x(d);
  const std::int64_t n = chart.site_count();
  for (std::int64_t s = 0; s < n; ++s) {
    chart.site_coords(s, coords);
    for (int a = 0; a < d; ++a) x[a] = chart.position(a, coords[a]);
    for (int c = 0; c < out.components(); ++c)
      for (int m = 0; m < out.algebra_dim(); ++m)
        out.at(s, c, m) = spec.value(c, m, x);
  }
  return out;
}

template <class Spec>
FormField sample_spec_d(const Spec& spec, const LatticeChart& chart, int degree) {
  const int d = chart.dim();
  FormField out(chart, LieAlgebra::get(spec.kind()), degree + 1, 0);
  if (degree + 1 > d) {
    out.set_degenerate(true);
    return out;
  }
  const auto& tin = MultiIndexTable::get(d, degree);
  const auto& tout = out.table();
  std::vector<int> coords(d);
  std::vector<double> x(d);
  const std::int64_t n = chart.site_count();
  for (std::int64_t s = 0; s < n; ++s) {
    chart.site_coords(s, coords);
    for (int a = 0; a < d; ++a) x[a] = chart.position(a, coords[a]);
    for (int j = 0; j < tout.count(); ++j) {
      const auto& J = tout.axes(j);
      for (int m = 0; m < out.algebra_dim(); ++m) {
        double v = 0.0;
        for (size_t i = 0; i < J.size(); ++i) {
          std::vector<int> I(J);
          I.erase(I.begin() + static_cast<std::ptrdiff_t>(i));
          const int src = tin.index_of(I);
          const double sign = (i % 2 == 0) ? 1.0 : -1.0;
          v += sign * spec.derivative(src, m, J[i], x);
        }
        out.at(s, j, m) = v;
      }
    }
  }
  return out;
}
}  // namespace

WaveFormSpec::WaveFormSpec(int dim, int degree, AlgebraKind kind)
    : dim_(dim),
      degree_(degree),
      m_(LieAlgebra::get(kind).dim()),
      terms_(static_cast<size_t>(binomial(dim, degree)) * m_) {
  kind_ = kind;
}

std::vector<WaveTerm>& WaveFormSpec::terms(int comp, int a) {
  return terms_[static_cast<size_t>(comp) * m_ + a];
}

const std::vector<WaveTerm>& WaveFormSpec::terms(int comp, int a) const {
  return terms_[static_cast<size_t>(comp) * m_ + a];
}

double WaveFormSpec::value(int comp, int a, const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& t : terms(comp, a)) {
    double arg = t.phase;
    for (int i = 0; i < dim_; ++i) arg += t.wavevec[i] * x[i];
    v += t.coeff * std::sin(arg);
  }
  return v;
}

double WaveFormSpec::derivative(int comp, int a, int axis,
                                const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& t : terms(comp, a)) {
    double arg = t.phase;
    for (int i = 0; i < dim_; ++i) arg += t.wavevec[i] * x[i];
    v += t.coeff * t.wavevec[axis] * std::cos(arg);
  }
  return v;
}

FormField WaveFormSpec::sample(const LatticeChart& chart) const {
  return sample_spec(*this, chart, degree_);
}

FormField WaveFormSpec::sample_exterior_derivative(const LatticeChart& chart) const {
  return sample_spec_d(*this, chart, degree_);
}

WaveFormSpec WaveFormSpec::random(std::mt19937_64& rng, const LatticeChart& box_chart,
                                  int degree, AlgebraKind kind, int n_modes,
                                  double amplitude, int mode_cutoff) {
  WaveFormSpec spec(box_chart.dim(), degree, kind);
  const auto box = box_lengths(box_chart);
  std::uniform_int_distribution<int> mode(-mode_cutoff, mode_cutoff);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const int comps = binomial(box_chart.dim(), degree);
  const int m = LieAlgebra::get(kind).dim();
  for (int c = 0; c < comps; ++c) {
    for (int a = 0; a < m; ++a) {
      for (int t = 0; t < n_modes; ++t) {
        WaveTerm term;
        term.wavevec.resize(box_chart.dim());
        // zero-mean: redraw until at least one axis carries a wave
        bool nonzero = false;
        while (!nonzero) {
          for (int i = 0; i < box_chart.dim(); ++i) {
            const int mi = mode(rng);
            term.wavevec[i] = kTwoPi * mi / box[i];
            nonzero = nonzero || mi != 0;
          }
        }
        term.phase = phase(rng);
        term.coeff = coeff(rng) * amplitude / n_modes;
        spec.terms(c, a).push_back(std::move(term));
      }
    }
  }
  return spec;
}

PolyFormSpec::PolyFormSpec(int dim, int degree, AlgebraKind kind)
    : dim_(dim),
      degree_(degree),
      m_(LieAlgebra::get(kind).dim()),
      terms_(static_cast<size_t>(binomial(dim, degree)) * m_) {
  kind_ = kind;
}

std::vector<PolyFormSpec::Term>& PolyFormSpec::terms(int comp, int a) {
  return terms_[static_cast<size_t>(comp) * m_ + a];
}

double PolyFormSpec::value(int comp, int a, const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& t : terms_[static_cast<size_t>(comp) * m_ + a]) {
    double p = t.coeff;
    for (int i = 0; i < dim_; ++i)
      for (int e = 0; e < t.exponents[i]; ++e) p *= x[i];
    v += p;
  }
  return v;
}

double PolyFormSpec::derivative(int comp, int a, int axis,
                                const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& t : terms_[static_cast<size_t>(comp) * m_ + a]) {
    if (t.exponents[axis] == 0) continue;
    double p = t.coeff * t.exponents[axis];
    for (int i = 0; i < dim_; ++i) {
      const int e = t.exponents[i] - (i == axis ? 1 : 0);
      for (int k = 0; k < e; ++k) p *= x[i];
    }
    v += p;
  }
  return v;
}

FormField PolyFormSpec::sample(const LatticeChart& chart) const {
  return sample_spec(*this, chart, degree_);
}

FormField PolyFormSpec::sample_exterior_derivative(const LatticeChart& chart) const {
  return sample_spec_d(*this, chart, degree_);
}

PolyFormSpec PolyFormSpec::random(std::mt19937_64& rng, int dim, int degree,
                                  AlgebraKind kind, double amplitude) {
  PolyFormSpec spec(dim, degree, kind);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const int comps = binomial(dim, degree);
  const int m = LieAlgebra::get(kind).dim();
  // every monomial of total degree <= 2
  std::vector<std::vector<int>> monos;
  std::vector<int> e(dim, 0);
  monos.push_back(e);
  for (int i = 0; i < dim; ++i) {
    e.assign(dim, 0);
    e[i] = 1;
    monos.push_back(e);
    e[i] = 2;
    monos.push_back(e);
    for (int j = i + 1; j < dim; ++j) {
      e.assign(dim, 0);
      e[i] = 1;
      e[j] = 1;
      monos.push_back(e);
    }
  }
  for (int c = 0; c < comps; ++c)
    for (int a = 0; a < m; ++a)
      for (const auto& mono : monos)
        spec.terms(c, a).push_back({mono, coeff(rng) * amplitude});
  return spec;
}

std::vector<double> box_lengths(const LatticeChart& chart) {
  std::vector<double> box(chart.dim());
  for (int a = 0; a < chart.dim(); ++a) {
    const int n = chart.sizes()[a];
    box[a] = chart.spacings()[a] *
             (chart.boundary() == Boundary::periodic ? n : n - 1);
  }
  return box;
}

WaveFormSpec plane_wave_spec(const LatticeChart& chart, const std::vector<int>& modes,
                             int axis, double amplitude) {
  if (static_cast<int>(modes.size()) != chart.dim())
    throw std::invalid_argument("plane wave mode vector dimension mismatch");
  if (axis < 0 || axis >= chart.dim())
    throw std::invalid_argument("plane wave polarization axis out of range");
  WaveFormSpec spec(chart.dim(), 1, AlgebraKind::u1);
  const auto box = box_lengths(chart);
  WaveTerm term;
  term.wavevec.resize(chart.dim());
  for (int a = 0; a < chart.dim(); ++a)
    term.wavevec[a] = kTwoPi * modes[a] / box[a];
  term.coeff = amplitude;
  spec.terms(axis, 0).push_back(std::move(term));
  return spec;
}

FormField plane_wave_potential(const LatticeChart& chart,
                               const std::vector<int>& modes, int axis,
                               double amplitude) {
  return plane_wave_spec(chart, modes, axis, amplitude).sample(chart);
}

WaveAdmissibility plane_wave_admissibility(const LatticeChart& chart,
                                           const std::vector<int>& modes, int axis) {
  const auto box = box_lengths(chart);
  WaveAdmissibility adm;
  for (int a = 0; a < chart.dim(); ++a) {
    const double k = kTwoPi * modes[a] / box[a];
    adm.k_dot_k += chart.metric_sign(a) * k * k;
    if (a == axis) adm.k_dot_polarization = chart.metric_sign(a) * k;
  }
  return adm;
}

GroupField group_exponential(const FormField& xi) {
  if (xi.degree() != 0)
    throw std::invalid_argument("group exponential expects a 0-form");
  GroupField h(xi.chart(), xi.algebra().kind(), xi.margin());
  std::vector<double> v(xi.algebra_dim());
  const std::int64_t n = xi.sites();
  for (std::int64_t s = 0; s < n; ++s) {
    xi.value(s, 0, v);
    h.at(s) = GroupElement::exp(xi.algebra(), v);
  }
  return h;
}

FormField random_smooth_form(std::mt19937_64& rng, const LatticeChart& chart,
                             int degree, AlgebraKind kind, int n_modes,
                             double amplitude) {
  return WaveFormSpec::random(rng, chart, degree, kind, n_modes, amplitude)
      .sample(chart);
}

GroupField random_group_field(std::mt19937_64& rng, const LatticeChart& chart,
                              AlgebraKind kind, int n_modes, double amplitude) {
  return group_exponential(
      random_smooth_form(rng, chart, 0, kind, n_modes, amplitude));
}

}  // namespace lgt
