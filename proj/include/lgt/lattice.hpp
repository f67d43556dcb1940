#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lgt {

enum class Boundary { periodic, clamped };

std::string to_string(Boundary b);
Boundary boundary_from_string(std::string_view s);

/// Diagonal constant metric: one sign (+1 or -1) per axis.
struct MetricSignature {
  std::vector<int> diag;

  static MetricSignature euclidean(int dim);
  static MetricSignature lorentzian(int dim);  // (-,+,...,+)
  static MetricSignature parse(std::string_view s);

  int parity() const;  // product of the signs
  std::string str() const;
  bool operator==(const MetricSignature&) const = default;
};

/// Finite rectangular grid with per-axis spacing, boundary mode and metric.
/// Site order is row-major with axis 0 slowest, last axis contiguous.
class LatticeChart {
 public:
  LatticeChart(std::vector<int> sizes, std::vector<double> spacings,
               Boundary boundary, MetricSignature signature);

  int dim() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& spacings() const { return spacings_; }
  Boundary boundary() const { return boundary_; }
  const MetricSignature& signature() const { return signature_; }

  std::int64_t site_count() const { return site_count_; }
  double cell_volume() const { return cell_volume_; }
  int metric_sign(int axis) const { return signature_.diag[axis]; }
  std::int64_t stride(int axis) const { return strides_[axis]; }

  std::int64_t site_index(std::span<const int> coords) const;
  void site_coords(std::int64_t site, std::span<int> out) const;
  int coord(std::int64_t site, int axis) const {
    return static_cast<int>((site / strides_[axis]) % sizes_[axis]);
  }
  double position(int axis, int coord) const { return spacings_[axis] * coord; }

  /// Site shifted by `step` along `axis`; wraps on periodic charts,
  /// returns -1 when the shift leaves a clamped chart.
  std::int64_t neighbor(std::int64_t site, int axis, int step) const;

  /// True when every coordinate lies in [margin, size-1-margin].
  /// Periodic charts have no margin and every site is interior.
  bool in_interior(std::int64_t site, int margin) const;
  std::int64_t interior_count(int margin) const;

  /// Same physical box, spacings halved. Periodic: sizes doubled;
  /// clamped: N -> 2(N-1)+1.
  LatticeChart refined() const;

  std::string describe() const;
  bool operator==(const LatticeChart&) const = default;

 private:
  std::vector<int> sizes_;
  std::vector<double> spacings_;
  Boundary boundary_;
  MetricSignature signature_;
  std::vector<std::int64_t> strides_;
  std::int64_t site_count_ = 0;
  double cell_volume_ = 0.0;
};

/// Canonical strictly-increasing multi-indices of length k over {0..dim-1},
/// listed lexicographically, plus sign bookkeeping for wedge-type sums.
class MultiIndexTable {
 public:
  static const MultiIndexTable& get(int dim, int k);

  int dim() const { return dim_; }
  int degree() const { return k_; }
  int count() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& axes(int i) const { return indices_[i]; }
  int index_of(std::span<const int> sorted_axes) const;  // -1 when absent

  /// Position axis would occupy when inserted into indices_[i] (which must
  /// not already contain it).
  static int insertion_position(const std::vector<int>& axes, int axis);

  /// Sign of the permutation that sorts the concatenation (a, b) of two
  /// disjoint sorted tuples.
  static int merge_sign(std::span<const int> a, std::span<const int> b);

  /// Complement of indices_[i] in {0..dim-1}, sorted.
  std::vector<int> complement(int i) const;

 private:
  MultiIndexTable(int dim, int k);
  int dim_, k_;
  std::vector<std::vector<int>> indices_;
};

/// Product of metric signs over the axes of a multi-index (the metric
/// weight of that component; equals its raised version for +-1 metrics).
int metric_weight(const LatticeChart& chart, const std::vector<int>& axes);

/// One shuffle split L = J ∪ K with its merge sign, for bilinear
/// wedge-type products of a k-form and an l-form.
struct ShuffleTerm {
  int out;    // component in table (dim, k+l)
  int left;   // component in table (dim, k)
  int right;  // component in table (dim, l)
  int sign;
};

const std::vector<ShuffleTerm>& shuffle_terms(int dim, int k, int l);

/// Iterates sites whose coordinates all lie in [margin, size-1-margin].
template <class Fn>
void for_each_interior_site(const LatticeChart& chart, int margin, Fn&& fn) {
  const int d = chart.dim();
  if (margin == 0) {
    const std::int64_t n = chart.site_count();
    for (std::int64_t s = 0; s < n; ++s) fn(s);
    return;
  }
  std::vector<int> lo(d, margin), hi(d), c(d);
  for (int a = 0; a < d; ++a) {
    hi[a] = chart.sizes()[a] - 1 - margin;
    if (hi[a] < lo[a]) return;
    c[a] = lo[a];
  }
  for (;;) {
    fn(chart.site_index(c));
    int a = d - 1;
    while (a >= 0) {
      if (++c[a] <= hi[a]) break;
      c[a] = lo[a];
      --a;
    }
    if (a < 0) break;
  }
}

}  // namespace lgt
