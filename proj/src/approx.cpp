#include "nsdisc/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double sidelength_coefficient(ApproximationMethod method) {
  switch (method) {
    case ApproximationMethod::perimeter:
      return kPi / 4.0;
    case ApproximationMethod::area:
      return std::sqrt(kPi / (2.0 * (1.0 + kSqrt2)));
    case ApproximationMethod::inscribed_circle:
      return 2.0 * (kSqrt2 - 1.0);
    case ApproximationMethod::covering_circle:
      return std::sqrt(2.0 - kSqrt2);
    case ApproximationMethod::least_squares:
      return kPi / (4.0 * (kSqrt2 + 1.0) * std::log(std::tan(5.0 * kPi / 16.0)));
    case ApproximationMethod::least_distance:
      return 2.0 / (kSqrt2 + 1.0) * std::cos(kPi / 16.0);
  }
  throw std::invalid_argument("unknown approximation method");
}

}  // namespace

double ideal_sidelength(ApproximationMethod method, double r) {
  if (!(r > 0)) {
    throw std::invalid_argument("radius must be positive");
  }
  return sidelength_coefficient(method) * r;
}

ApproximationResult best_sequence(ApproximationMethod method, DescriptorKind kind, double r) {
  ApproximationResult result;
  result.method = method;
  result.kind = kind;
  result.radius = r;
  result.a_ideal = ideal_sidelength(method, r);
  const StepCounts counts = invert_sidelength(result.a_ideal, kind);
  result.k1 = counts.k1;
  result.k2 = counts.k2;
  result.k = counts.k1 + counts.k2;
  result.clamped = counts.clamped;
  result.degenerate = counts.k1 == 0 || counts.k2 == 0;
  result.realized = describe(counts.k1, counts.k2, kind);
  return result;
}

std::vector<CoefficientEntry> coefficient_table() {
  std::vector<CoefficientEntry> table;
  table.reserve(18);
  for (DescriptorKind kind :
       {DescriptorKind::pixel, DescriptorKind::inner_hull, DescriptorKind::outer_hull}) {
    for (ApproximationMethod method : kAllMethods) {
      const double c = sidelength_coefficient(method);
      CoefficientEntry e;
      e.method = method;
      e.kind = kind;
      switch (kind) {
        case DescriptorKind::pixel:
          e.k1_coeff = c;
          e.k1_offset = 1.0;
          e.k2_coeff = c / 2.0;
          e.k2_offset = -0.5;
          break;
        case DescriptorKind::inner_hull:
          e.k1_coeff = c / kSqrt2;
          e.k1_offset = 0.0;
          e.k2_coeff = c / 2.0;
          e.k2_offset = 0.0;
          break;
        case DescriptorKind::outer_hull:
          e.k1_coeff = c / kSqrt2;
          e.k1_offset = 0.0;
          e.k2_coeff = c / 2.0;
          e.k2_offset = -0.5;
          break;
      }
      table.push_back(e);
    }
  }
  return table;
}

std::vector<int> canonical_prefix(int k1, int k2) {
  if (k1 < 0 || k2 < 0) {
    throw std::invalid_argument("step counts must be nonnegative");
  }
  const std::int64_t k = static_cast<std::int64_t>(k1) + k2;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(k));
  // Element i is a 2 exactly when floor(i*k2/k) advances; this spaces the k2
  // 2-steps as evenly as the integers allow.
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::int64_t hi = i * k2 / k;
    const std::int64_t lo = (i - 1) * k2 / k;
    prefix.push_back(hi > lo ? 2 : 1);
  }
  return prefix;
}

NeighbourhoodSequence sequence_for(const ApproximationResult& result) {
  return NeighbourhoodSequence::with_constant_tail(canonical_prefix(result.k1, result.k2), 1);
}

std::vector<SweepRow> sweep_series(DescriptorKind kind, double r_min, double r_max, double step,
                                   Execution exec) {
  if (!(r_min > 0) || !(r_max >= r_min) || !(step > 0)) {
    throw std::invalid_argument("sweep needs 0 < r_min <= r_max and step > 0");
  }
  // Radii derive from the index so the grid is identical on every run.
  const auto count =
      static_cast<std::int64_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));

  const bool parallel = exec == Execution::parallel;
  #pragma omp parallel for if (parallel) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.radius = r_min + static_cast<double>(i) * step;
    for (std::size_t m = 0; m < kAllMethods.size(); ++m) {
      row.by_method[m] = best_sequence(kAllMethods[m], kind, row.radius);
    }
  }
  return rows;
}

std::string to_string(ApproximationMethod method) {
  switch (method) {
    case ApproximationMethod::perimeter: return "perimeter";
    case ApproximationMethod::area: return "area";
    case ApproximationMethod::inscribed_circle: return "inscribed";
    case ApproximationMethod::covering_circle: return "covering";
    case ApproximationMethod::least_squares: return "least_squares";
    case ApproximationMethod::least_distance: return "least_distance";
  }
  return "?";
}

ApproximationMethod method_from_string(const std::string& name) {
  if (name == "perimeter") return ApproximationMethod::perimeter;
  if (name == "area") return ApproximationMethod::area;
  if (name == "inscribed" || name == "inscribed_circle") return ApproximationMethod::inscribed_circle;
  if (name == "covering" || name == "covering_circle") return ApproximationMethod::covering_circle;
  if (name == "least_squares") return ApproximationMethod::least_squares;
  if (name == "least_distance") return ApproximationMethod::least_distance;
  throw std::invalid_argument("unknown approximation method: " + name);
}

}  // namespace nsdisc
