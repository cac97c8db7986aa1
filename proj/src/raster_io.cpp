#include "nsdisc/raster_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nsdisc {

namespace {

constexpr int kMaxAsciiSteps = 35;  // two-character labels

int cell_width(int radius_steps) { return radius_steps >= 10 ? 2 : 1; }

void set_pixel(RasterImage& image, int col, int row, std::uint8_t value) {
  if (col < 0 || row < 0 || col >= image.width || row >= image.height) return;
  image.pixels[static_cast<std::size_t>(row) * image.width + col] = value;
}

// Midpoint-circle outline: per first-octant column the nearest pixel to the
// true curve, mirrored eight ways.
void draw_circle_outline(RasterImage& image, int center_col, int center_row, double radius) {
  for (int x = 0;; ++x) {
    const double rest = radius * radius - static_cast<double>(x) * x;
    if (rest < 0) break;
    const int y = static_cast<int>(std::lround(std::sqrt(rest)));
    if (x > y) break;
    const int pts[8][2] = {{x, y}, {y, x}, {-x, y}, {-y, x}, {x, -y}, {y, -x}, {-x, -y}, {-y, -x}};
    for (const auto& p : pts) {
      set_pixel(image, center_col + p[0], center_row + p[1], kCircleGray);
    }
  }
}

}  // namespace

std::string render_ascii(const DigitalDisc& disc) {
  const int k = disc.radius_steps();
  if (k > kMaxAsciiSteps) {
    throw std::invalid_argument(
        "disc too large for a text label map (radius_steps > 35); render it as PGM instead");
  }
  const int w = cell_width(k);
  std::string out;
  std::string line;
  for (int row = 0; row < disc.width(); ++row) {
    const int dy = k - row;
    line.clear();
    for (int dx = -k; dx <= k; ++dx) {
      if (dx > -k) line.push_back(' ');
      const std::int32_t v = disc.label_at(dx, dy);
      if (v < 0) {
        line.append(static_cast<std::size_t>(w), ' ');
      } else {
        const std::string digits = std::to_string(v);
        line.append(static_cast<std::size_t>(w) - digits.size(), ' ');
        line.append(digits);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out.push_back('\n');
  }
  return out;
}

DigitalDisc parse_ascii(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(current);
  if (lines.empty() || lines.size() % 2 == 0) {
    throw std::invalid_argument("a label map has an odd number of rows");
  }
  const int k = (static_cast<int>(lines.size()) - 1) / 2;
  const int w = cell_width(k);
  const int width = 2 * k + 1;
  const std::size_t full = static_cast<std::size_t>(width) * (w + 1) - 1;

  std::vector<std::int32_t> labels(static_cast<std::size_t>(width) * width, -1);
  for (int row = 0; row < width; ++row) {
    std::string line = lines[static_cast<std::size_t>(row)];
    if (line.size() > full) {
      throw std::invalid_argument("label map row longer than its grid");
    }
    line.resize(full, ' ');
    for (int col = 0; col < width; ++col) {
      const std::string cell = line.substr(static_cast<std::size_t>(col) * (w + 1),
                                           static_cast<std::size_t>(w));
      if (cell.find_first_not_of(' ') == std::string::npos) continue;
      std::size_t parsed = 0;
      const int value = std::stoi(cell, &parsed);
      if (cell.find_first_not_of(" 0123456789") != std::string::npos || parsed == 0) {
        throw std::invalid_argument("label map cell is not a number: '" + cell + "'");
      }
      labels[static_cast<std::size_t>(row) * width + col] = value;
    }
  }
  return DigitalDisc(Point{0, 0}, k, std::move(labels));
}

RasterImage render_image(const DigitalDisc& disc, std::optional<double> circle_radius) {
  const int k = disc.radius_steps();
  RasterImage image;
  image.width = disc.width();
  image.height = disc.width();
  image.pixels.assign(static_cast<std::size_t>(image.width) * image.height, kBackgroundGray);
  for (int row = 0; row < image.height; ++row) {
    const int dy = k - row;
    for (int dx = -k; dx <= k; ++dx) {
      if (disc.label_at(dx, dy) >= 0) {
        set_pixel(image, dx + k, row, kDiscGray);
      }
    }
  }
  if (circle_radius) {
    if (!(*circle_radius > 0)) {
      throw std::invalid_argument("circle overlay radius must be positive");
    }
    draw_circle_outline(image, k, k, *circle_radius);
  }
  return image;
}

std::string write_pgm(const RasterImage& image) {
  std::ostringstream out;
  out << "P2\n" << image.width << ' ' << image.height << "\n255\n";
  for (int row = 0; row < image.height; ++row) {
    for (int col = 0; col < image.width; ++col) {
      if (col) out << ' ';
      out << static_cast<int>(image.pixels[static_cast<std::size_t>(row) * image.width + col]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_pgm(const DigitalDisc& disc, std::optional<double> circle_radius) {
  return write_pgm(render_image(disc, circle_radius));
}

std::string export_csv(const std::vector<SweepRow>& series) {
  std::string out = "r,method,descriptor,k1,k2,k\n";
  char buf[160];
  for (const SweepRow& row : series) {
    for (const ApproximationResult& res : row.by_method) {
      std::snprintf(buf, sizeof buf, "%.6f,%s,%s,%d,%d,%d\n", row.radius,
                    to_string(res.method).c_str(), to_string(res.kind).c_str(), res.k1, res.k2,
                    res.k);
      out += buf;
    }
  }
  return out;
}

}  // namespace nsdisc
