#include "lgt/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace lgt {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

constexpr char kMagic[8] = {'L', 'G', 'F', 'S', 'N', 'A', 'P', '1'};

void put_u32(std::ofstream& f, std::uint32_t v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_i32(std::ofstream& f, std::int32_t v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_f64(std::ofstream& f, double v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof v);
}
std::uint32_t get_u32(std::ifstream& f) {
  std::uint32_t v = 0;
  f.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
std::int32_t get_i32(std::ifstream& f) {
  std::int32_t v = 0;
  f.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
double get_f64(std::ifstream& f) {
  double v = 0;
  f.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

struct Header {
  std::uint32_t field_class, dim, degree, m, boundary, kind, margin;
  std::vector<std::int32_t> signature;
  std::vector<std::uint32_t> sizes;
  std::vector<double> spacings;
};

void write_header(std::ofstream& f, const Header& h) {
  f.write(kMagic, sizeof kMagic);
  put_u32(f, h.field_class);
  put_u32(f, h.dim);
  put_u32(f, h.degree);
  put_u32(f, h.m);
  put_u32(f, h.boundary);
  put_u32(f, h.kind);
  put_u32(f, h.margin);
  for (auto s : h.signature) put_i32(f, s);
  for (auto n : h.sizes) put_u32(f, n);
  for (auto x : h.spacings) put_f64(f, x);
}

Header read_header(std::ifstream& f, const std::string& path) {
  char magic[8];
  f.read(magic, sizeof magic);
  if (!f || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("not a field snapshot: " + path);
  Header h;
  h.field_class = get_u32(f);
  h.dim = get_u32(f);
  h.degree = get_u32(f);
  h.m = get_u32(f);
  h.boundary = get_u32(f);
  h.kind = get_u32(f);
  h.margin = get_u32(f);
  if (h.dim < 2 || h.dim > 4) throw std::runtime_error("snapshot: bad dimension");
  h.signature.resize(h.dim);
  h.sizes.resize(h.dim);
  h.spacings.resize(h.dim);
  for (auto& s : h.signature) s = get_i32(f);
  for (auto& n : h.sizes) n = get_u32(f);
  for (auto& x : h.spacings) x = get_f64(f);
  if (!f) throw std::runtime_error("snapshot: truncated header in " + path);
  return h;
}

LatticeChart chart_from_header(const Header& h) {
  MetricSignature sig;
  for (auto s : h.signature) sig.diag.push_back(s);
  std::vector<int> sizes(h.sizes.begin(), h.sizes.end());
  return LatticeChart(std::move(sizes), h.spacings,
                      h.boundary == 0 ? Boundary::periodic : Boundary::clamped,
                      std::move(sig));
}

Header header_for(const LatticeChart& chart, std::uint32_t field_class,
                  std::uint32_t degree, std::uint32_t m, AlgebraKind kind,
                  std::uint32_t margin) {
  Header h;
  h.field_class = field_class;
  h.dim = chart.dim();
  h.degree = degree;
  h.m = m;
  h.boundary = chart.boundary() == Boundary::periodic ? 0 : 1;
  h.kind = kind == AlgebraKind::u1 ? 0 : 1;
  h.margin = margin;
  for (int a = 0; a < chart.dim(); ++a) {
    h.signature.push_back(chart.metric_sign(a));
    h.sizes.push_back(chart.sizes()[a]);
    h.spacings.push_back(chart.spacings()[a]);
  }
  return h;
}

}  // namespace

void write_snapshot(const FormField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_header(out, header_for(f.chart(), 0, f.degree(), f.algebra_dim(),
                               f.algebra().kind(), f.margin()));
  out.write(reinterpret_cast<const char*>(f.raw().data()),
            static_cast<std::streamsize>(f.raw().size() * sizeof(double)));
  if (!out) throw std::runtime_error("write failed: " + path);
}

FormField read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Header h = read_header(in, path);
  if (h.field_class != 0) throw std::runtime_error("snapshot holds a group field: " + path);
  const LieAlgebra& alg = LieAlgebra::get(h.kind == 0 ? AlgebraKind::u1 : AlgebraKind::su2);
  if (static_cast<int>(h.m) != alg.dim())
    throw std::runtime_error("snapshot: algebra dimension mismatch");
  FormField f(chart_from_header(h), alg, h.degree, h.margin);
  in.read(reinterpret_cast<char*>(f.raw().data()),
          static_cast<std::streamsize>(f.raw().size() * sizeof(double)));
  if (!in) throw std::runtime_error("snapshot: truncated data in " + path);
  return f;
}

void write_group_snapshot(const GroupField& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const std::uint32_t m = g.kind() == AlgebraKind::u1 ? 1 : 4;
  write_header(out, header_for(g.chart(), 1, 0, m, g.kind(), g.margin()));
  const std::int64_t n = g.sites();
  std::vector<double> plane(n);
  for (std::uint32_t c = 0; c < m; ++c) {
    for (std::int64_t s = 0; s < n; ++s) plane[s] = g.at(s).q[c];
    out.write(reinterpret_cast<const char*>(plane.data()),
              static_cast<std::streamsize>(plane.size() * sizeof(double)));
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

GroupField read_group_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Header h = read_header(in, path);
  if (h.field_class != 1) throw std::runtime_error("snapshot holds a form field: " + path);
  const AlgebraKind kind = h.kind == 0 ? AlgebraKind::u1 : AlgebraKind::su2;
  GroupField g(chart_from_header(h), kind, h.margin);
  const std::uint32_t m = kind == AlgebraKind::u1 ? 1 : 4;
  if (h.m != m) throw std::runtime_error("snapshot: group layout mismatch");
  const std::int64_t n = g.sites();
  std::vector<double> plane(n);
  for (std::uint32_t c = 0; c < m; ++c) {
    in.read(reinterpret_cast<char*>(plane.data()),
            static_cast<std::streamsize>(plane.size() * sizeof(double)));
    for (std::int64_t s = 0; s < n; ++s) g.at(s).q[c] = plane[s];
  }
  if (!in) throw std::runtime_error("snapshot: truncated data in " + path);
  for (std::int64_t s = 0; s < n; ++s) g.at(s).kind = kind;
  return g;
}

}  // namespace lgt
