#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsdisc/approx.hpp"
#include "nsdisc/ns_core.hpp"

namespace nsdisc {

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major gray levels 0..255
};

inline constexpr std::uint8_t kDiscGray = 0;
inline constexpr std::uint8_t kBackgroundGray = 255;
inline constexpr std::uint8_t kCircleGray = 128;

/// Text grid of distance labels, blank outside the disc, center at the
/// geometric middle. Rejects discs with radius_steps > 35 (labels no longer
/// fit two characters); use the PGM renderer for those.
std::string render_ascii(const DigitalDisc& disc);

/// Inverse of render_ascii; the reconstructed disc is centered at the origin.
DigitalDisc parse_ascii(const std::string& text);

/// Binary-threshold image of the disc (disc pixels dark, background light).
/// When circle_radius is given, a midpoint-circle outline is drawn in a third
/// gray level for visual comparison.
RasterImage render_image(const DigitalDisc& disc, std::optional<double> circle_radius = {});

/// Plain-text PGM (P2), bit-exact: "P2\n<w> <h>\n255\n" then one line per
/// row, samples separated by single spaces.
std::string write_pgm(const RasterImage& image);

std::string render_pgm(const DigitalDisc& disc, std::optional<double> circle_radius = {});

/// CSV with header "r,method,descriptor,k1,k2,k", radii to six decimals,
/// rows ordered by radius then method.
std::string export_csv(const std::vector<SweepRow>& series);

}  // namespace nsdisc
