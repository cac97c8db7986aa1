#pragma once

#include <array>
#include <string>
#include <vector>

#include "nsdisc/ns_core.hpp"
#include "nsdisc/octagon.hpp"

namespace nsdisc {

enum class ApproximationMethod {
  perimeter,        // octagon with the perimeter of the circle
  area,             // octagon with the area of the circle
  inscribed_circle, // circle inscribed in the octagon
  covering_circle,  // circle covering the octagon
  least_squares,    // curve fit, squared radial distance
  least_distance,   // curve fit, absolute radial distance
};

inline constexpr std::array<ApproximationMethod, 6> kAllMethods = {
    ApproximationMethod::perimeter,        ApproximationMethod::area,
    ApproximationMethod::inscribed_circle, ApproximationMethod::covering_circle,
    ApproximationMethod::least_squares,    ApproximationMethod::least_distance,
};

/// Continuous sidelength of the best regular octagon for a circle of radius
/// r > 0: a fixed per-method coefficient times r.
double ideal_sidelength(ApproximationMethod method, double r);

struct ApproximationResult {
  ApproximationMethod method = ApproximationMethod::perimeter;
  DescriptorKind kind = DescriptorKind::inner_hull;
  double radius = 0;
  double a_ideal = 0;
  int k1 = 0;
  int k2 = 0;
  int k = 0;  // minimum sequence length k1 + k2
  OctagonDescriptor realized;
  bool degenerate = false;  // k1 == 0 or k2 == 0: square disc
  bool clamped = false;
};

/// Full construction pipeline: ideal sidelength -> step counts -> realized
/// octagon.
ApproximationResult best_sequence(ApproximationMethod method, DescriptorKind kind, double r);

/// One row of the step-count coefficient table:
/// k1 = [k1_coeff * r + k1_offset], k2 = [k2_coeff * r + k2_offset].
struct CoefficientEntry {
  ApproximationMethod method = ApproximationMethod::perimeter;
  DescriptorKind kind = DescriptorKind::pixel;
  double k1_coeff = 0;
  double k1_offset = 0;
  double k2_coeff = 0;
  double k2_offset = 0;
};

/// All 18 method x kind entries, derived from the sidelength coefficients.
std::vector<CoefficientEntry> coefficient_table();

/// First k1 + k2 sequence elements with the 2-steps spread as evenly as
/// possible, so intermediate-radius discs are also well rounded.
std::vector<int> canonical_prefix(int k1, int k2);

/// Canonical prefix for the result's step counts, continued with constant 1.
NeighbourhoodSequence sequence_for(const ApproximationResult& result);

struct SweepRow {
  double radius = 0;
  std::array<ApproximationResult, 6> by_method;
};

/// best_sequence for every method over the radius grid r_min, r_min + step,
/// ... (endpoint included up to a half-step slack). Radii evaluate in
/// parallel under OpenMP; row order is deterministic.
std::vector<SweepRow> sweep_series(DescriptorKind kind, double r_min, double r_max, double step,
                                   Execution exec = Execution::parallel);

std::string to_string(ApproximationMethod method);
ApproximationMethod method_from_string(const std::string& name);

}  // namespace nsdisc
