#pragma once

#include <string>

#include "lgt/field.hpp"

namespace lgt {

/// Binary field snapshot, little-endian throughout:
///   magic "LGFSNAP1" (8 bytes)
///   u32 field class (0 = form field, 1 = group field)
///   u32 dim, u32 degree k, u32 algebra dim m
///   u32 boundary (0 periodic, 1 clamped), u32 algebra kind (0 u1, 1 su2)
///   u32 valid margin
///   i32 signature[dim] (+1/-1)
///   u32 sizes[dim]
///   f64 spacings[dim]
///   f64 data[components * m * sites], plane-major: multi-index outer,
///       algebra coordinate inner, sites row-major within each plane.
/// Group fields store algebra-coordinate logs for u1 (m = 1) and quaternion
/// quadruples for su2 (m = 4).
void write_snapshot(const FormField& f, const std::string& path);
FormField read_snapshot(const std::string& path);

void write_group_snapshot(const GroupField& g, const std::string& path);
GroupField read_group_snapshot(const std::string& path);

}  // namespace lgt
