#include "lgt/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lgt {

LoopSpec LoopSpec::parse(std::vector<int> origin, const std::string& steps) {
  LoopSpec loop;
  loop.origin = std::move(origin);
  int dir = 0;
  for (char c : steps) {
    if (c == ' ' || c == '\t') continue;
    if (c == '+' || c == '-') {
      if (dir != 0) throw std::invalid_argument("loop steps: dangling sign");
      dir = (c == '+') ? +1 : -1;
      continue;
    }
    int axis = -1;
    switch (c) {
      case 'x': case '0': axis = 0; break;
      case 'y': case '1': axis = 1; break;
      case 'z': case '2': axis = 2; break;
      case 'w': case '3': axis = 3; break;
      default:
        throw std::invalid_argument(std::string("loop steps: unknown axis '") + c + "'");
    }
    if (dir == 0) throw std::invalid_argument("loop steps: axis without sign");
    loop.steps.emplace_back(axis, dir);
    dir = 0;
  }
  if (dir != 0) throw std::invalid_argument("loop steps: trailing sign");
  if (loop.steps.empty()) throw std::invalid_argument("loop steps: empty path");
  return loop;
}

namespace {

/// Multilinear interpolation of every canonical component of F at fractional
/// lattice coordinates u (clamped to the valid cell range).
void interpolate_components(const FormField& F, const std::vector<double>& u,
                            std::vector<double>& out, int alg_coord) {
  const LatticeChart& chart = F.chart();
  const int d = chart.dim();
  const int m = F.margin();
  std::vector<int> base(d);
  std::vector<double> frac(d);
  for (int a = 0; a < d; ++a) {
    const int lo = m;
    const int hi = chart.sizes()[a] - 2 - m;  // valid cell anchors
    double ua = u[a];
    int cell = static_cast<int>(std::floor(ua));
    cell = std::clamp(cell, lo, hi);
    base[a] = cell;
    frac[a] = ua - cell;
  }
  std::fill(out.begin(), out.end(), 0.0);
  const int corners = 1 << d;
  std::vector<int> coords(d);
  for (int corner = 0; corner < corners; ++corner) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      const int bit = (corner >> a) & 1;
      coords[a] = base[a] + bit;
      w *= bit ? frac[a] : (1.0 - frac[a]);
    }
    if (w == 0.0) continue;
    const std::int64_t s = chart.site_index(coords);
    for (int c = 0; c < F.components(); ++c) out[c] += w * F.at(s, c, alg_coord);
  }
}

}  // namespace

FormField poincare_reconstruct(const FormField& F, const std::vector<int>& origin,
                               double compat_tol) {
  const LatticeChart& chart = F.chart();
  if (F.degree() != 2) throw std::invalid_argument("expected a 2-form field");
  if (F.algebra().kind() != AlgebraKind::u1)
    throw std::invalid_argument("reconstruction handles Abelian fields only");
  if (chart.boundary() != Boundary::clamped)
    throw std::invalid_argument("reconstruction needs a clamped (contractible) chart");
  if (static_cast<int>(origin.size()) != chart.dim())
    throw std::invalid_argument("origin dimension mismatch");

  FormField dF = exterior_derivative(F);
  const double closure = dF.degenerate() ? 0.0 : linf_norm(dF);
  if (closure > compat_tol) {
    std::ostringstream os;
    os << "compatibility condition violated: |dF|_inf = " << closure << " > "
       << compat_tol;
    throw CompatibilityError(os.str());
  }

  const int d = chart.dim();
  const int margin = F.margin();
  for (int a = 0; a < d; ++a)
    if (origin[a] < margin || origin[a] > chart.sizes()[a] - 1 - margin)
      throw std::invalid_argument("origin outside the valid interior");

  FormField A(chart, F.algebra(), 1, margin);
  const auto& t2 = F.table();
  const double hmin = *std::min_element(chart.spacings().begin(),
                                        chart.spacings().end());
  std::vector<double> x0(d), delta(d), point(d), comps(F.components());
  for (int a = 0; a < d; ++a) x0[a] = chart.position(a, origin[a]);

  std::vector<int> coords(d);
  for_each_interior_site(chart, margin, [&](std::int64_t s) {
    chart.site_coords(s, coords);
    double len = 0.0;
    for (int a = 0; a < d; ++a) {
      delta[a] = chart.position(a, coords[a]) - x0[a];
      len += delta[a] * delta[a];
    }
    len = std::sqrt(len);
    if (len == 0.0) return;  // A(origin) = 0 in the radial gauge

    int nsub = static_cast<int>(std::ceil(2.0 * len / hmin));
    nsub = std::max(2, nsub + (nsub % 2));  // Simpson needs an even count
    const double dt = 1.0 / nsub;

    // accumulated integral of t * F_{n m}(x0 + t delta) per canonical comp
    std::vector<double> integral(F.components(), 0.0);
    for (int node = 0; node <= nsub; ++node) {
      const double t = node * dt;
      double w = (node == 0 || node == nsub) ? 1.0 : (node % 2 == 1 ? 4.0 : 2.0);
      w *= dt / 3.0;
      for (int a = 0; a < d; ++a) point[a] = (x0[a] + t * delta[a]) / chart.spacings()[a];
      interpolate_components(F, point, comps, 0);
      for (int c = 0; c < F.components(); ++c) integral[c] += w * t * comps[c];
    }
    // contract the first slot with the displacement: A_b += delta^a I_{ab},
    // A_a -= delta^b I_{ab} over canonical components (a < b)
    for (int c = 0; c < F.components(); ++c) {
      const int a = t2.axes(c)[0];
      const int b = t2.axes(c)[1];
      A.at(s, b, 0) += delta[a] * integral[c];
      A.at(s, a, 0) -= delta[b] * integral[c];
    }
  });
  return A;
}

GroupElement holonomy(const FormField& A, const LoopSpec& loop) {
  const LatticeChart& chart = A.chart();
  if (A.degree() != 1) throw std::invalid_argument("holonomy expects a 1-form");
  if (static_cast<int>(loop.origin.size()) != chart.dim())
    throw std::invalid_argument("loop origin dimension mismatch");
  const LieAlgebra& alg = A.algebra();
  GroupElement g = GroupElement::identity(alg.kind());
  std::int64_t site = chart.site_index(loop.origin);
  const std::int64_t start = site;
  std::vector<double> xi(alg.dim());
  for (const auto& [axis, dir] : loop.steps) {
    const std::int64_t mid = chart.neighbor(site, axis, dir);
    const std::int64_t end = mid < 0 ? -1 : chart.neighbor(mid, axis, dir);
    if (mid < 0 || end < 0)
      throw std::invalid_argument("loop leaves the chart");
    if (!chart.in_interior(mid, A.margin()))
      throw std::invalid_argument("loop enters the invalid boundary margin");
    const double span = -2.0 * dir * chart.spacings()[axis];
    for (int x = 0; x < alg.dim(); ++x) xi[x] = span * A.at(mid, axis, x);
    g = GroupElement::exp(alg, xi) * g;
    site = end;
  }
  if (site != start) throw std::invalid_argument("open path: loop must close");
  return g;
}

double flatness_residual(const FormField& A) { return linf_norm(curvature(A)); }

}  // namespace lgt
