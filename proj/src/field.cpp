#include "lgt/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgt {

namespace {
int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}
}  // namespace

FormField::FormField(LatticeChart chart, const LieAlgebra& algebra, int degree,
                     int margin)
    : chart_(std::move(chart)),
      algebra_(&algebra),
      degree_(degree),
      margin_(chart_.boundary() == Boundary::periodic ? 0 : margin),
      components_(binomial(chart_.dim(), degree)) {
  if (degree < 0 || degree > chart_.dim() + 1)
    throw std::invalid_argument("form degree out of range");
  data_.assign(static_cast<std::int64_t>(components_) * algebra_->dim() *
                   chart_.site_count(),
               0.0);
}

bool FormField::same_shape(const FormField& rhs) const {
  return chart_ == rhs.chart_ && algebra_->kind() == rhs.algebra_->kind() &&
         degree_ == rhs.degree_;
}

FormField& FormField::operator+=(const FormField& rhs) {
  if (!same_shape(rhs)) throw std::invalid_argument("field shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  margin_ = std::max(margin_, rhs.margin_);
  return *this;
}

FormField& FormField::operator-=(const FormField& rhs) {
  if (!same_shape(rhs)) throw std::invalid_argument("field shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  margin_ = std::max(margin_, rhs.margin_);
  return *this;
}

FormField& FormField::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

void FormField::axpy(double s, const FormField& rhs) {
  if (!same_shape(rhs)) throw std::invalid_argument("field shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += s * rhs.data_[i];
  margin_ = std::max(margin_, rhs.margin_);
}

void FormField::clear_exterior() {
  if (margin_ == 0) return;
  for (int c = 0; c < components_; ++c) {
    for (int a = 0; a < algebra_dim(); ++a) {
      double* p = plane(c, a);
      for (std::int64_t s = 0; s < sites(); ++s)
        if (!chart_.in_interior(s, margin_)) p[s] = 0.0;
    }
  }
}

FormField operator+(FormField a, const FormField& b) {
  a += b;
  return a;
}

FormField operator-(FormField a, const FormField& b) {
  a -= b;
  return a;
}

FormField operator*(double s, FormField a) {
  a *= s;
  return a;
}

double linf_norm(const FormField& f) {
  double m = 0.0;
  const int na = f.algebra_dim();
  for (int c = 0; c < f.components(); ++c) {
    for (int a = 0; a < na; ++a) {
      const double* p = f.plane(c, a);
      for_each_interior_site(f.chart(), f.margin(), [&](std::int64_t s) {
        m = std::max(m, std::abs(p[s]));
      });
    }
  }
  return m;
}

double l2_norm(const FormField& f) {
  double acc = 0.0;
  const int na = f.algebra_dim();
  for (int c = 0; c < f.components(); ++c) {
    for (int a = 0; a < na; ++a) {
      const double* p = f.plane(c, a);
      for_each_interior_site(f.chart(), f.margin(), [&](std::int64_t s) {
        acc += p[s] * p[s];
      });
    }
  }
  return std::sqrt(acc * f.chart().cell_volume());
}

double linf_distance(const FormField& a, const FormField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("field shape mismatch");
  const int margin = std::max(a.margin(), b.margin());
  double m = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (int x = 0; x < a.algebra_dim(); ++x) {
      const double* pa = a.plane(c, x);
      const double* pb = b.plane(c, x);
      for_each_interior_site(a.chart(), margin, [&](std::int64_t s) {
        m = std::max(m, std::abs(pa[s] - pb[s]));
      });
    }
  }
  return m;
}

GroupField::GroupField(LatticeChart chart, AlgebraKind kind, int margin)
    : chart_(std::move(chart)),
      kind_(kind),
      margin_(chart_.boundary() == Boundary::periodic ? 0 : margin),
      data_(chart_.site_count(), GroupElement::identity(kind)) {}

}  // namespace lgt
