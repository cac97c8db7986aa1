#pragma once

namespace nsdisc {

/// Numeric oracle for the two curve-based approximations: the functionals are
/// built by quadrature and minimized directly, independent of the closed-form
/// coefficients in approx.

enum class CurveObjective { least_squares, least_distance };

/// Apothem of the regular octagon with side a: m = (sqrt(2)+1)/2 * a.
double octagon_apothem(double a);

/// Octagon boundary in polar form on the fundamental sixteenth:
/// z(alpha) = m / cos(alpha), alpha in [0, pi/8].
double octagon_polar(double alpha, double a);

/// Angle where the octagon side crosses the circle of radius r:
/// arccos((sqrt(2)+1)/2 * a/r). Requires the argument <= 1.
double threshold_angle(double a, double r);

/// Curve-distance functional between the circle of radius r and the regular
/// octagon of side a, on [0, pi/8], by composite Simpson quadrature:
///   least_squares:  integral of (z - z0)^2
///   least_distance: integral of (z0 - z) up to the threshold angle minus the
///                   integral beyond it (the threshold is a panel boundary).
double objective(CurveObjective kind, double a, double r, int panels = 2048);

/// Sidelength a* for which the circle of radius r is the stationary circle of
/// the functional. Golden-section search of the scale-normalized functional
/// (objective divided by a^2 for least_squares, by a for least_distance) over
/// a in [0.5 r, 1.2 r], tolerance 1e-8 r.
double minimize_objective(CurveObjective kind, double r);

}  // namespace nsdisc
