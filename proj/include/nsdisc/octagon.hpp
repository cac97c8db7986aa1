#pragma once

#include <string>

namespace nsdisc {

/// The three conventions for measuring the sides of a sequence-generated
/// octagon: in pixels, via the convex hull of pixel centers, or via the
/// convex hull of pixels taken as unit squares.
enum class DescriptorKind { pixel, inner_hull, outer_hull };

struct OctagonDescriptor {
  DescriptorKind kind = DescriptorKind::inner_hull;
  int k1 = 0;  // count of 1-steps
  int k2 = 0;  // count of 2-steps
  double a = 0;  // horizontal/vertical sidelength
  double b = 0;  // diagonal sidelength
  double perimeter = 0;
  double area = 0;
};

/// Sides, perimeter and area of the octagon spanned by k1 1-steps and k2
/// 2-steps. The pixel descriptor requires k1 >= 1.
OctagonDescriptor describe(int k1, int k2, DescriptorKind kind);

struct StepCounts {
  int k1 = 0;
  int k2 = 0;
  bool clamped = false;  // a component was forced into its valid range
};

/// Step counts of the regular (a = b) octagon with ideal sidelength a.
/// Rounding is half away from zero.
StepCounts invert_sidelength(double a, DescriptorKind kind);

/// P^2 / A; requires both positive.
double isoperimetric_ratio(double perimeter, double area);

/// Isoperimetric ratio of the octagon hull as a function of the 2-frequency
/// c = k2/k, on [0, 1]. Equals 16 at both endpoints (degenerate squares) and
/// is minimal at c = sqrt(2) - 1.
double kappa_of_c(double c);

/// Numerical minimizer of kappa_of_c over [0, 1] (golden-section search).
double optimal_c();

/// Limit 2-frequency p = lim k2/k producing regular octagons.
double limit_frequency(DescriptorKind kind);

struct CompositionRatio {
  double c = 0;  // 2-frequency k2/k of a concrete prefix
  double p = 0;  // limit frequency for the descriptor kind
};
CompositionRatio composition_ratio(int k1, int k2, DescriptorKind kind);

/// a^2 + 2*sqrt(2)*a*b + b^2, the hull-octagon area.
double hull_area(double a, double b);

/// 2*(1 + sqrt(2))*a^2, the regular-octagon area.
double regular_octagon_area(double a);

std::string to_string(DescriptorKind kind);
DescriptorKind descriptor_kind_from_string(const std::string& name);

}  // namespace nsdisc
