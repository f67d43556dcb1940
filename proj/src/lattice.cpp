#include "lgt/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "clamped";
}

Boundary boundary_from_string(std::string_view s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "clamped") return Boundary::clamped;
  throw std::invalid_argument("unknown boundary mode: " + std::string(s));
}

MetricSignature MetricSignature::euclidean(int dim) {
  return MetricSignature{std::vector<int>(dim, +1)};
}

MetricSignature MetricSignature::lorentzian(int dim) {
  std::vector<int> d(dim, +1);
  d[0] = -1;
  return MetricSignature{std::move(d)};
}

MetricSignature MetricSignature::parse(std::string_view s) {
  MetricSignature sig;
  for (char c : s) {
    if (c == '+')
      sig.diag.push_back(+1);
    else if (c == '-')
      sig.diag.push_back(-1);
    else
      throw std::invalid_argument("signature string must contain only + and -");
  }
  if (sig.diag.empty()) throw std::invalid_argument("empty signature string");
  return sig;
}

int MetricSignature::parity() const {
  int p = 1;
  for (int s : diag) p *= s;
  return p;
}

std::string MetricSignature::str() const {
  std::string s;
  for (int d : diag) s.push_back(d > 0 ? '+' : '-');
  return s;
}

LatticeChart::LatticeChart(std::vector<int> sizes, std::vector<double> spacings,
                           Boundary boundary, MetricSignature signature)
    : sizes_(std::move(sizes)),
      spacings_(std::move(spacings)),
      boundary_(boundary),
      signature_(std::move(signature)) {
  const int d = static_cast<int>(sizes_.size());
  if (d < 2 || d > 4) throw std::invalid_argument("chart dimension must be 2, 3 or 4");
  if (static_cast<int>(spacings_.size()) != d)
    throw std::invalid_argument("spacings length must match dimension");
  if (static_cast<int>(signature_.diag.size()) != d)
    throw std::invalid_argument("signature length must match dimension");
  for (int n : sizes_)
    if (n < 4) throw std::invalid_argument("all chart sizes must be >= 4");
  for (double h : spacings_)
    if (!(h > 0.0)) throw std::invalid_argument("all spacings must be positive");
  for (int s : signature_.diag)
    if (s != 1 && s != -1)
      throw std::invalid_argument("signature entries must be +1 or -1");

  strides_.assign(d, 1);
  for (int a = d - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * sizes_[a + 1];
  site_count_ = strides_[0] * sizes_[0];
  cell_volume_ = 1.0;
  for (double h : spacings_) cell_volume_ *= h;
}

std::int64_t LatticeChart::site_index(std::span<const int> coords) const {
  std::int64_t idx = 0;
  for (int a = 0; a < dim(); ++a) idx += strides_[a] * coords[a];
  return idx;
}

void LatticeChart::site_coords(std::int64_t site, std::span<int> out) const {
  for (int a = 0; a < dim(); ++a)
    out[a] = static_cast<int>((site / strides_[a]) % sizes_[a]);
}

std::int64_t LatticeChart::neighbor(std::int64_t site, int axis, int step) const {
  const int n = sizes_[axis];
  int c = coord(site, axis) + step;
  if (boundary_ == Boundary::periodic) {
    c %= n;
    if (c < 0) c += n;
  } else if (c < 0 || c >= n) {
    return -1;
  }
  return site + (c - coord(site, axis)) * strides_[axis];
}

bool LatticeChart::in_interior(std::int64_t site, int margin) const {
  if (margin == 0) return true;
  for (int a = 0; a < dim(); ++a) {
    const int c = coord(site, a);
    if (c < margin || c > sizes_[a] - 1 - margin) return false;
  }
  return true;
}

std::int64_t LatticeChart::interior_count(int margin) const {
  std::int64_t n = 1;
  for (int a = 0; a < dim(); ++a) {
    const std::int64_t w = sizes_[a] - 2 * static_cast<std::int64_t>(margin);
    if (w <= 0) return 0;
    n *= w;
  }
  return n;
}

LatticeChart LatticeChart::refined() const {
  std::vector<int> ns(sizes_.size());
  std::vector<double> hs(spacings_.size());
  for (size_t a = 0; a < sizes_.size(); ++a) {
    ns[a] = boundary_ == Boundary::periodic ? 2 * sizes_[a] : 2 * (sizes_[a] - 1) + 1;
    hs[a] = spacings_[a] / 2.0;
  }
  return LatticeChart(std::move(ns), std::move(hs), boundary_, signature_);
}

std::string LatticeChart::describe() const {
  std::ostringstream os;
  os << dim() << "d ";
  for (int a = 0; a < dim(); ++a) os << (a ? "x" : "") << sizes_[a];
  os << " " << to_string(boundary_) << " " << signature_.str() << " h=(";
  for (int a = 0; a < dim(); ++a) {
    if (a) os << ",";
    os << spacings_[a];
  }
  os << ")";
  return os.str();
}

MultiIndexTable::MultiIndexTable(int dim, int k) : dim_(dim), k_(k) {
  if (k < 0 || k > dim) return;  // empty table: zero-dimensional component space
  // lexicographic enumeration of strictly increasing k-tuples
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    indices_.push_back({});
    return;
  }
  for (;;) {
    indices_.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

const MultiIndexTable& MultiIndexTable::get(int dim, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MultiIndexTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<MultiIndexTable>(new MultiIndexTable(dim, k))).first;
  return *it->second;
}

int MultiIndexTable::index_of(std::span<const int> sorted_axes) const {
  for (int i = 0; i < count(); ++i) {
    if (std::equal(indices_[i].begin(), indices_[i].end(), sorted_axes.begin(),
                   sorted_axes.end()))
      return i;
  }
  return -1;
}

int MultiIndexTable::insertion_position(const std::vector<int>& axes, int axis) {
  int p = 0;
  while (p < static_cast<int>(axes.size()) && axes[p] < axis) ++p;
  return p;
}

int MultiIndexTable::merge_sign(std::span<const int> a, std::span<const int> b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return (inversions % 2 == 0) ? +1 : -1;
}

std::vector<int> MultiIndexTable::complement(int i) const {
  std::vector<int> out;
  const auto& in = indices_[i];
  size_t p = 0;
  for (int a = 0; a < dim_; ++a) {
    if (p < in.size() && in[p] == a)
      ++p;
    else
      out.push_back(a);
  }
  return out;
}

int metric_weight(const LatticeChart& chart, const std::vector<int>& axes) {
  int w = 1;
  for (int a : axes) w *= chart.metric_sign(a);
  return w;
}

const std::vector<ShuffleTerm>& shuffle_terms(int dim, int k, int l) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<ShuffleTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(dim, k, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<ShuffleTerm> terms;
  const auto& tk = MultiIndexTable::get(dim, k);
  const auto& tl = MultiIndexTable::get(dim, l);
  const auto& to = MultiIndexTable::get(dim, k + l);
  for (int i = 0; i < tk.count(); ++i) {
    for (int j = 0; j < tl.count(); ++j) {
      const auto& a = tk.axes(i);
      const auto& b = tl.axes(j);
      std::vector<int> merged(a);
      merged.insert(merged.end(), b.begin(), b.end());
      std::sort(merged.begin(), merged.end());
      if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        continue;  // overlapping axes
      const int out = to.index_of(merged);
      terms.push_back({out, i, j, MultiIndexTable::merge_sign(a, b)});
    }
  }
  return cache.emplace(key, std::move(terms)).first->second;
}

}  // namespace lgt
