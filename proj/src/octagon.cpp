#include "nsdisc/octagon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "golden_section.hpp"

namespace nsdisc {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

OctagonDescriptor describe(int k1, int k2, DescriptorKind kind) {
  if (k1 < 0 || k2 < 0) {
    throw std::invalid_argument("step counts must be nonnegative");
  }
  OctagonDescriptor d;
  d.kind = kind;
  d.k1 = k1;
  d.k2 = k2;
  switch (kind) {
    case DescriptorKind::pixel:
      if (k1 < 1) {
        throw std::invalid_argument("the pixel descriptor requires k1 >= 1");
      }
      d.a = 2.0 * k2 + 1.0;
      d.b = k1 - 1.0;
      d.area = (2.0 * k2 + 1.0) * (2.0 * k2 + 1.0) + 2.0 * k1 * (4.0 * k2 + k1 + 1.0);
      break;
    case DescriptorKind::inner_hull:
      d.a = 2.0 * k2;
      d.b = kSqrt2 * k1;
      d.area = hull_area(d.a, d.b);
      break;
    case DescriptorKind::outer_hull:
      d.a = 2.0 * k2 + 1.0;
      d.b = kSqrt2 * k1;
      d.area = hull_area(d.a, d.b);
      break;
  }
  d.perimeter = 4.0 * (d.a + d.b);
  return d;
}

StepCounts invert_sidelength(double a, DescriptorKind kind) {
  if (!(a > 0)) {
    throw std::invalid_argument("sidelength must be positive");
  }
  long k1 = 0;
  long k2 = 0;
  switch (kind) {
    case DescriptorKind::pixel:
      k1 = std::lround(a + 1.0);
      k2 = std::lround((a - 1.0) / 2.0);
      break;
    case DescriptorKind::inner_hull:
      k1 = std::lround(a / kSqrt2);
      k2 = std::lround(a / 2.0);
      break;
    case DescriptorKind::outer_hull:
      k1 = std::lround(a / kSqrt2);
      k2 = std::lround((a - 1.0) / 2.0);
      break;
  }
  StepCounts counts;
  counts.clamped = false;
  if (k2 < 0) {
    k2 = 0;
    counts.clamped = true;
  }
  const long k1_min = kind == DescriptorKind::pixel ? 1 : 0;
  if (k1 < k1_min) {
    k1 = k1_min;
    counts.clamped = true;
  }
  counts.k1 = static_cast<int>(k1);
  counts.k2 = static_cast<int>(k2);
  return counts;
}

double isoperimetric_ratio(double perimeter, double area) {
  if (!(perimeter > 0) || !(area > 0)) {
    throw std::invalid_argument("perimeter and area must be positive");
  }
  return perimeter * perimeter / area;
}

double kappa_of_c(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("the 2-frequency must lie in [0, 1]");
  }
  return 16.0 * (1.0 - 2.0 * (2.0 - kSqrt2) * (c * (1.0 - c)) / (c * (2.0 - c) + 1.0));
}

double optimal_c() {
  return detail::golden_section_min([](double c) { return kappa_of_c(c); }, 0.0, 1.0, 1e-9);
}

double limit_frequency(DescriptorKind kind) {
  return kind == DescriptorKind::pixel ? 1.0 / 3.0 : kSqrt2 - 1.0;
}

CompositionRatio composition_ratio(int k1, int k2, DescriptorKind kind) {
  if (k1 < 0 || k2 < 0 || k1 + k2 == 0) {
    throw std::invalid_argument("composition needs nonnegative counts with k1 + k2 >= 1");
  }
  CompositionRatio ratio;
  ratio.c = static_cast<double>(k2) / (static_cast<double>(k1) + static_cast<double>(k2));
  ratio.p = limit_frequency(kind);
  return ratio;
}

double hull_area(double a, double b) { return a * a + 2.0 * kSqrt2 * a * b + b * b; }

double regular_octagon_area(double a) { return 2.0 * (1.0 + kSqrt2) * a * a; }

std::string to_string(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::pixel: return "pixel";
    case DescriptorKind::inner_hull: return "inner";
    case DescriptorKind::outer_hull: return "outer";
  }
  return "?";
}

DescriptorKind descriptor_kind_from_string(const std::string& name) {
  if (name == "pixel") return DescriptorKind::pixel;
  if (name == "inner" || name == "inner_hull") return DescriptorKind::inner_hull;
  if (name == "outer" || name == "outer_hull") return DescriptorKind::outer_hull;
  throw std::invalid_argument("unknown descriptor kind: " + name);
}

}  // namespace nsdisc
