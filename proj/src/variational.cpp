#include "nsdisc/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "golden_section.hpp"

namespace nsdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSector = kPi / 8.0;  // one sixteenth of the full turn

// Composite Simpson over [lo, hi] with an even panel count.
template <typename F>
double simpson(F f, double lo, double hi, int panels) {
  if (hi <= lo) return 0.0;
  const double h = (hi - lo) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    const double x = lo + i * h;
    if (i % 2) {
      odd += f(x);
    } else {
      even += f(x);
    }
  }
  return h / 3.0 * (f(lo) + f(hi) + 4.0 * odd + 2.0 * even);
}

void check_domain(double a, double r) {
  if (!(a > 0) || !(r > 0)) {
    throw std::invalid_argument("sidelength and radius must be positive");
  }
}

int checked_panels(int panels) {
  if (panels < 2 || panels % 2) {
    throw std::invalid_argument("Simpson quadrature needs an even panel count >= 2");
  }
  return panels;
}

// Functional with the threshold clamped into [0, pi/8]; the clamp is the
// continuous extension used by the minimizer when its bracket leaves the
// strict domain of threshold_angle.
double evaluate(CurveObjective kind, double a, double r, int panels) {
  const double m = octagon_apothem(a);
  if (kind == CurveObjective::least_squares) {
    const auto f = [&](double alpha) {
      const double d = m / std::cos(alpha) - r;
      return d * d;
    };
    return simpson(f, 0.0, kSector, panels);
  }
  const double ratio = std::min(m / r, 1.0);
  const double alpha_t = std::min(std::acos(ratio), kSector);
  const auto f = [&](double alpha) { return r - m / std::cos(alpha); };
  // alpha_t is a panel boundary of its own piece, so the integrand's kink
  // never falls inside a Simpson panel.
  return simpson(f, 0.0, alpha_t, panels) - simpson(f, alpha_t, kSector, panels);
}

}  // namespace

double octagon_apothem(double a) { return (std::numbers::sqrt2 + 1.0) / 2.0 * a; }

double octagon_polar(double alpha, double a) {
  if (!(a > 0)) {
    throw std::invalid_argument("sidelength must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= kSector)) {
    throw std::invalid_argument("alpha must lie in the fundamental sixteenth [0, pi/8]");
  }
  return octagon_apothem(a) / std::cos(alpha);
}

double threshold_angle(double a, double r) {
  check_domain(a, r);
  const double ratio = octagon_apothem(a) / r;
  if (ratio > 1.0) {
    throw std::invalid_argument("octagon lies outside the circle: apothem exceeds the radius");
  }
  return std::acos(ratio);
}

double objective(CurveObjective kind, double a, double r, int panels) {
  check_domain(a, r);
  if (kind == CurveObjective::least_distance && octagon_apothem(a) / r > 1.0) {
    throw std::invalid_argument("octagon lies outside the circle: apothem exceeds the radius");
  }
  return evaluate(kind, a, r, checked_panels(panels));
}

double minimize_objective(CurveObjective kind, double r) {
  if (!(r > 0)) {
    throw std::invalid_argument("radius must be positive");
  }
  const double lo = 0.5 * r;
  const double hi = 1.2 * r;
  const double tol = 1e-8 * r;
  // The functional is homogeneous in (a, r) of degree 2 (squared distance)
  // or 1 (distance); dividing by the matching power of a makes its
  // stationary circle condition a plain minimum over a.
  const auto normalized = [&](double a) {
    const double value = evaluate(kind, a, r, 2048);
    return kind == CurveObjective::least_squares ? value / (a * a) : value / a;
  };
  const double best = detail::golden_section_min(normalized, lo, hi, tol);
  if (best < lo + 2.0 * tol || best > hi - 2.0 * tol) {
    throw std::logic_error("minimizer converged onto the bracket edge");
  }
  return best;
}

}  // namespace nsdisc
