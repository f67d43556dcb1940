#include "lgt/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgt {

namespace {

/// dst += scale * central difference of src along axis. Both are plane
/// pointers over the full grid; on clamped charts only sites with the
/// axis coordinate away from the edge are touched.
void accumulate_central_difference(const LatticeChart& chart, const double* src,
                                   double* dst, int axis, double scale) {
  const double inv2h = scale / (2.0 * chart.spacings()[axis]);
  const std::int64_t n = chart.site_count();
  const std::int64_t stride = chart.stride(axis);
  const int size = chart.sizes()[axis];
  const std::int64_t edge = static_cast<std::int64_t>(size - 1) * stride;
  if (chart.boundary() == Boundary::periodic) {
    for (std::int64_t s = 0; s < n; ++s) {
      const int c = static_cast<int>((s / stride) % size);
      const std::int64_t up = (c == size - 1) ? s - edge : s + stride;
      const std::int64_t dn = (c == 0) ? s + edge : s - stride;
      dst[s] += inv2h * (src[up] - src[dn]);
    }
  } else {
    for (std::int64_t s = 0; s < n; ++s) {
      const int c = static_cast<int>((s / stride) % size);
      if (c == 0 || c == size - 1) continue;
      dst[s] += inv2h * (src[s + stride] - src[s - stride]);
    }
  }
}

int derivative_margin(const FormField& f) {
  return f.chart().boundary() == Boundary::periodic ? 0 : f.margin() + 1;
}

}  // namespace

FormField partial_derivative(const FormField& f, int axis) {
  if (axis < 0 || axis >= f.chart().dim())
    throw std::invalid_argument("derivative axis out of range");
  if (f.chart().boundary() == Boundary::clamped && f.chart().sizes()[axis] < 3)
    throw std::invalid_argument("clamped axis too short for a central stencil");
  FormField out(f.chart(), f.algebra(), f.degree(), derivative_margin(f));
  for (int c = 0; c < f.components(); ++c)
    for (int a = 0; a < f.algebra_dim(); ++a)
      accumulate_central_difference(f.chart(), f.plane(c, a), out.plane(c, a),
                                    axis, 1.0);
  out.clear_exterior();
  return out;
}

FormField exterior_derivative(const FormField& w) {
  const int dim = w.chart().dim();
  if (w.degree() >= dim) {
    FormField out(w.chart(), w.algebra(), dim, derivative_margin(w));
    out.set_degenerate(true);
    return out;
  }
  FormField out(w.chart(), w.algebra(), w.degree() + 1, derivative_margin(w));
  const auto& tin = w.table();
  const auto& tout = out.table();
  for (int j = 0; j < tout.count(); ++j) {
    const auto& J = tout.axes(j);
    for (size_t i = 0; i < J.size(); ++i) {
      std::vector<int> I(J);
      I.erase(I.begin() + static_cast<std::ptrdiff_t>(i));
      const int src = tin.index_of(I);
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      for (int a = 0; a < w.algebra_dim(); ++a)
        accumulate_central_difference(w.chart(), w.plane(src, a), out.plane(j, a),
                                      J[i], sign);
    }
  }
  out.clear_exterior();
  return out;
}

FormField hodge_star(const FormField& w) {
  const int dim = w.chart().dim();
  FormField out(w.chart(), w.algebra(), dim - w.degree(), w.margin());
  const auto& tin = w.table();
  const auto& tout = out.table();
  const std::int64_t n = w.sites();
  for (int i = 0; i < tin.count(); ++i) {
    const auto comp = tin.complement(i);
    const int j = tout.index_of(comp);
    const double factor = MultiIndexTable::merge_sign(tin.axes(i), comp) *
                          metric_weight(w.chart(), tin.axes(i));
    for (int a = 0; a < w.algebra_dim(); ++a) {
      const double* src = w.plane(i, a);
      double* dst = out.plane(j, a);
      for (std::int64_t s = 0; s < n; ++s) dst[s] = factor * src[s];
    }
  }
  return out;
}

FormField hodge_star_inverse(const FormField& w) {
  const int dim = w.chart().dim();
  const int k = w.degree();
  FormField out = hodge_star(w);
  const int sign = (((k * (dim - k)) % 2 == 0) ? 1 : -1) * w.chart().signature().parity();
  if (sign < 0) out *= -1.0;
  return out;
}

FormField codifferential(const FormField& w) {
  if (w.degree() < 1)
    throw std::invalid_argument("codifferential needs a form of degree >= 1");
  FormField out(w.chart(), w.algebra(), w.degree() - 1, derivative_margin(w));
  const auto& tin = w.table();
  const auto& tout = out.table();
  const int dim = w.chart().dim();
  for (int i = 0; i < tout.count(); ++i) {
    const auto& I = tout.axes(i);
    for (int mu = 0; mu < dim; ++mu) {
      if (std::find(I.begin(), I.end(), mu) != I.end()) continue;
      std::vector<int> J(I);
      const int pos = MultiIndexTable::insertion_position(J, mu);
      J.insert(J.begin() + pos, mu);
      const int src = tin.index_of(J);
      const double sign = -((pos % 2 == 0) ? 1.0 : -1.0) * w.chart().metric_sign(mu);
      for (int a = 0; a < w.algebra_dim(); ++a)
        accumulate_central_difference(w.chart(), w.plane(src, a), out.plane(i, a),
                                      mu, sign);
    }
  }
  out.clear_exterior();
  return out;
}

FormField wedge(const FormField& a, const FormField& b) {
  if (a.algebra_dim() != 1 || b.algebra_dim() != 1)
    throw std::invalid_argument("wedge expects scalar-valued forms");
  if (!(a.chart() == b.chart())) throw std::invalid_argument("chart mismatch");
  const int dim = a.chart().dim();
  if (a.degree() + b.degree() > dim)
    throw std::invalid_argument("wedge degree overflow");
  FormField out(a.chart(), a.algebra(), a.degree() + b.degree(),
                std::max(a.margin(), b.margin()));
  const auto& terms = shuffle_terms(dim, a.degree(), b.degree());
  const std::int64_t n = a.sites();
  for (const auto& t : terms) {
    const double* pa = a.plane(t.left, 0);
    const double* pb = b.plane(t.right, 0);
    double* po = out.plane(t.out, 0);
    for (std::int64_t s = 0; s < n; ++s) po[s] += t.sign * pa[s] * pb[s];
  }
  out.clear_exterior();
  return out;
}

double inner_product(const FormField& a, const FormField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("field shape mismatch");
  const int margin = std::max(a.margin(), b.margin());
  const auto& table = a.table();
  double acc = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    const double gw = metric_weight(a.chart(), table.axes(c));
    double comp = 0.0;
    for (int x = 0; x < a.algebra_dim(); ++x) {
      const double* pa = a.plane(c, x);
      const double* pb = b.plane(c, x);
      for_each_interior_site(a.chart(), margin,
                             [&](std::int64_t s) { comp += pa[s] * pb[s]; });
    }
    acc += gw * comp;
  }
  return acc * a.chart().cell_volume();
}

FormField pointwise_pairing(const FormField& a, const FormField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("field shape mismatch");
  FormField out(a.chart(), LieAlgebra::u1(), 0, std::max(a.margin(), b.margin()));
  const auto& table = a.table();
  const std::int64_t n = a.sites();
  double* po = out.plane(0, 0);
  for (int c = 0; c < a.components(); ++c) {
    const double gw = metric_weight(a.chart(), table.axes(c));
    for (int x = 0; x < a.algebra_dim(); ++x) {
      const double* pa = a.plane(c, x);
      const double* pb = b.plane(c, x);
      for (std::int64_t s = 0; s < n; ++s) po[s] += gw * pa[s] * pb[s];
    }
  }
  out.clear_exterior();
  return out;
}

}  // namespace lgt
