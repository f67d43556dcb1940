#include "lgt/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
  // principal value in (-pi, pi]
  double r = std::remainder(a, kTwoPi);
  if (r <= -kTwoPi / 2) r += kTwoPi;
  return r;
}

// sin(x)/x with a series fallback near zero
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}
}  // namespace

std::string to_string(AlgebraKind k) { return k == AlgebraKind::u1 ? "u1" : "su2"; }

AlgebraKind algebra_from_string(std::string_view s) {
  if (s == "u1") return AlgebraKind::u1;
  if (s == "su2") return AlgebraKind::su2;
  throw std::invalid_argument("unknown algebra: " + std::string(s));
}

LieAlgebra::LieAlgebra(AlgebraKind k) : kind_(k), m_(k == AlgebraKind::u1 ? 1 : 3) {
  c_.fill(0.0);
  if (k == AlgebraKind::su2) {
    // c^k_{ij} = eps_{ijk}
    auto set = [&](int c, int a, int b, double v) { c_[(c * 3 + a) * 3 + b] = v; };
    set(2, 0, 1, +1.0);
    set(2, 1, 0, -1.0);
    set(0, 1, 2, +1.0);
    set(0, 2, 1, -1.0);
    set(1, 2, 0, +1.0);
    set(1, 0, 2, -1.0);
  }
}

const LieAlgebra& LieAlgebra::u1() {
  static const LieAlgebra a(AlgebraKind::u1);
  return a;
}

const LieAlgebra& LieAlgebra::su2() {
  static const LieAlgebra a(AlgebraKind::su2);
  return a;
}

const LieAlgebra& LieAlgebra::get(AlgebraKind k) {
  return k == AlgebraKind::u1 ? u1() : su2();
}

void LieAlgebra::bracket(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) const {
  if (kind_ == AlgebraKind::u1) {
    out[0] = 0.0;
    return;
  }
  // cross product in the eps_ijk basis
  out[0] = a[1] * b[2] - a[2] * b[1];
  out[1] = a[2] * b[0] - a[0] * b[2];
  out[2] = a[0] * b[1] - a[1] * b[0];
}

double LieAlgebra::pair(std::span<const double> a, std::span<const double> b) const {
  double s = 0.0;
  for (int i = 0; i < m_; ++i) s += a[i] * b[i];
  return s;
}

void LieAlgebra::coadjoint(std::span<const double> xi, std::span<const double> mu,
                           std::span<double> out) const {
  if (kind_ == AlgebraKind::u1) {
    out[0] = 0.0;
    return;
  }
  // <out, eta> = -<mu, [xi, eta]>  =>  out = -(mu x xi) = xi x mu
  out[0] = xi[1] * mu[2] - xi[2] * mu[1];
  out[1] = xi[2] * mu[0] - xi[0] * mu[2];
  out[2] = xi[0] * mu[1] - xi[1] * mu[0];
}

GroupElement GroupElement::identity(AlgebraKind k) {
  GroupElement g;
  g.kind = k;
  if (k == AlgebraKind::su2) g.q = {1.0, 0.0, 0.0, 0.0};
  return g;
}

GroupElement GroupElement::exp(const LieAlgebra& alg, std::span<const double> xi) {
  GroupElement g;
  g.kind = alg.kind();
  if (alg.kind() == AlgebraKind::u1) {
    g.q[0] = wrap_angle(xi[0]);
    return g;
  }
  const double n = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  const double half = 0.5 * n;
  const double f = 0.5 * sinc(half);  // sin(|xi|/2)/|xi|
  g.q = {std::cos(half), f * xi[0], f * xi[1], f * xi[2]};
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  GroupElement g;
  g.kind = kind;
  if (kind == AlgebraKind::u1) {
    g.q[0] = wrap_angle(q[0] + rhs.q[0]);
    return g;
  }
  const auto& a = q;
  const auto& b = rhs.q;
  g.q = {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
         a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
         a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
         a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  const double n =
      std::sqrt(g.q[0] * g.q[0] + g.q[1] * g.q[1] + g.q[2] * g.q[2] + g.q[3] * g.q[3]);
  for (double& v : g.q) v /= n;
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.kind = kind;
  if (kind == AlgebraKind::u1) {
    g.q[0] = wrap_angle(-q[0]);
    return g;
  }
  g.q = {q[0], -q[1], -q[2], -q[3]};
  return g;
}

void GroupElement::log(std::span<double> xi_out) const {
  if (kind == AlgebraKind::u1) {
    xi_out[0] = q[0];
    return;
  }
  const double vn = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  const double angle = 2.0 * std::atan2(vn, q[0]);
  if (vn < 1e-300) {
    xi_out[0] = xi_out[1] = xi_out[2] = 0.0;
    return;
  }
  const double f = angle / vn;
  xi_out[0] = f * q[1];
  xi_out[1] = f * q[2];
  xi_out[2] = f * q[3];
}

double GroupElement::log_norm() const {
  if (kind == AlgebraKind::u1) return std::abs(q[0]);
  const double vn = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  return 2.0 * std::atan2(vn, q[0]);
}

void GroupElement::adjoint(std::span<const double> xi, std::span<double> out) const {
  if (kind == AlgebraKind::u1) {
    out[0] = xi[0];
    return;
  }
  // rotate xi by the unit quaternion: v' = v + 2 w (u x v) + 2 u x (u x v)
  const double w = q[0], ux = q[1], uy = q[2], uz = q[3];
  const double vx = xi[0], vy = xi[1], vz = xi[2];
  const double cx = uy * vz - uz * vy;
  const double cy = uz * vx - ux * vz;
  const double cz = ux * vy - uy * vx;
  const double dx = uy * cz - uz * cy;
  const double dy = uz * cx - ux * cz;
  const double dz = ux * cy - uy * cx;
  out[0] = vx + 2.0 * (w * cx + dx);
  out[1] = vy + 2.0 * (w * cy + dy);
  out[2] = vz + 2.0 * (w * cz + dz);
}

double GroupElement::distance(const GroupElement& rhs) const {
  if (kind == AlgebraKind::u1) return std::abs(wrap_angle(q[0] - rhs.q[0]));
  double d = 0.0;
  // quaternions double-cover: compare up to global sign
  double dot = 0.0;
  for (int i = 0; i < 4; ++i) dot += q[i] * rhs.q[i];
  const double s = dot >= 0 ? 1.0 : -1.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(q[i] - s * rhs.q[i]));
  return d;
}

}  // namespace lgt
