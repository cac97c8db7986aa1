#include "nsdisc/ns_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nsdisc {

namespace {

void check_values(const std::vector<int>& prefix) {
  for (int v : prefix) {
    if (v != 1 && v != 2) {
      throw std::invalid_argument("sequence elements must be 1 or 2, got " + std::to_string(v));
    }
  }
}

// Minimal m with b_1 + ... + b_m >= s, for every s in [0, max_sum].
std::vector<int> steps_to_reach(const NeighbourhoodSequence& seq, int max_sum) {
  std::vector<int> table(static_cast<std::size_t>(max_sum) + 1, 0);
  int m = 0;
  std::int64_t sum = 0;
  for (int s = 1; s <= max_sum; ++s) {
    while (sum < s) sum += seq.element(++m);
    table[static_cast<std::size_t>(s)] = m;
  }
  return table;
}

struct Offset {
  int dx, dy;
};

constexpr Offset kCityBlock[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr Offset kChessboard[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                   {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};

std::span<const Offset> offsets_for(int j) {
  return j == 1 ? std::span<const Offset>(kCityBlock) : std::span<const Offset>(kChessboard);
}

}  // namespace

NeighbourhoodSequence::NeighbourhoodSequence(std::vector<int> prefix, TailRule tail,
                                             int tail_value)
    : prefix_(std::move(prefix)), tail_(tail), tail_value_(tail_value) {}

NeighbourhoodSequence NeighbourhoodSequence::periodic(std::vector<int> prefix) {
  if (prefix.empty()) {
    throw std::invalid_argument("a periodic sequence needs a nonempty prefix");
  }
  check_values(prefix);
  return NeighbourhoodSequence(std::move(prefix), TailRule::periodic, 1);
}

NeighbourhoodSequence NeighbourhoodSequence::with_constant_tail(std::vector<int> prefix,
                                                                int tail_value) {
  check_values(prefix);
  if (tail_value != 1 && tail_value != 2) {
    throw std::invalid_argument("tail value must be 1 or 2");
  }
  return NeighbourhoodSequence(std::move(prefix), TailRule::constant, tail_value);
}

NeighbourhoodSequence NeighbourhoodSequence::constant(int value) {
  return with_constant_tail({}, value);
}

int NeighbourhoodSequence::element(std::int64_t i) const {
  if (i < 1) {
    throw std::invalid_argument("sequence indices start at 1");
  }
  const auto n = static_cast<std::int64_t>(prefix_.size());
  if (i <= n) return prefix_[static_cast<std::size_t>(i - 1)];
  if (tail_ == TailRule::constant) return tail_value_;
  return prefix_[static_cast<std::size_t>((i - 1) % n)];
}

std::string NeighbourhoodSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out << ',';
    out << prefix_[i];
  }
  out << ')';
  if (tail_ == TailRule::periodic) {
    out << " periodic";
  } else {
    out << " then constant " << tail_value_;
  }
  return out.str();
}

bool is_j_neighbour(Point p, Point q, int j) {
  if (j != 1 && j != 2) {
    throw std::invalid_argument("neighbourhood index must be 1 or 2");
  }
  const int ax = std::abs(p.x - q.x);
  const int ay = std::abs(p.y - q.y);
  return ax <= 1 && ay <= 1 && ax + ay <= j;
}

bool is_valid_path(std::span<const Point> points, const NeighbourhoodSequence& seq) {
  if (points.empty()) {
    throw std::invalid_argument("a path needs at least one point");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!is_j_neighbour(points[i - 1], points[i], seq.element(static_cast<std::int64_t>(i)))) {
      return false;
    }
  }
  return true;
}

int ns_distance_bfs(Point p, Point q, const NeighbourhoodSequence& seq) {
  const int dx = q.x - p.x;
  const int dy = q.y - p.y;
  if (dx == 0 && dy == 0) return 0;

  // Any point on a minimal path stays within Chebyshev radius |dx|+|dy| of p
  // (each step changes the Chebyshev distance by at most 1, and the distance
  // itself never exceeds |dx|+|dy|).
  const int bound = std::abs(dx) + std::abs(dy);
  const int width = 2 * bound + 1;
  std::vector<char> visited(static_cast<std::size_t>(width) * width, 0);
  const auto at = [&](int x, int y) {
    return static_cast<std::size_t>(y + bound) * width + static_cast<std::size_t>(x + bound);
  };

  std::vector<Offset> frontier{{0, 0}}, next;
  visited[at(0, 0)] = 1;
  for (int step = 1; step <= bound; ++step) {
    next.clear();
    const auto moves = offsets_for(seq.element(step));
    for (const Offset& o : frontier) {
      for (const Offset& mv : moves) {
        const int nx = o.dx + mv.dx;
        const int ny = o.dy + mv.dy;
        if (std::abs(nx) > bound || std::abs(ny) > bound) continue;
        if (visited[at(nx, ny)]) continue;
        if (nx == dx && ny == dy) return step;
        visited[at(nx, ny)] = 1;
        next.push_back({nx, ny});
      }
    }
    frontier.swap(next);
  }
  throw std::logic_error("wavefront failed to reach the target inside its bound");
}

int ns_distance(Point p, Point q, const NeighbourhoodSequence& seq) {
  const int x = std::abs(q.x - p.x);
  const int y = std::abs(q.y - p.y);
  const int s = x + y;
  int m = 0;
  std::int64_t sum = 0;
  while (sum < s) sum += seq.element(++m);
  return std::max(std::max(x, y), m);
}

DigitalDisc::DigitalDisc(Point center, int radius_steps, std::vector<std::int32_t> labels)
    : center_(center),
      radius_steps_(radius_steps),
      width_(2 * radius_steps + 1),
      labels_(std::move(labels)) {
  if (radius_steps_ < 0) {
    throw std::invalid_argument("radius_steps must be nonnegative");
  }
  if (labels_.size() != static_cast<std::size_t>(width_) * width_) {
    throw std::invalid_argument("label grid size does not match the bounding box");
  }
  const std::size_t center_index =
      static_cast<std::size_t>(radius_steps_) * width_ + static_cast<std::size_t>(radius_steps_);
  if (labels_[center_index] != 0) {
    throw std::invalid_argument("the center must carry label 0");
  }
  for (std::int32_t v : labels_) {
    if (v > radius_steps_ || v < -1) {
      throw std::invalid_argument("labels must lie in [-1, radius_steps]");
    }
    if (v >= 0) ++point_count_;
  }
}

std::int32_t DigitalDisc::label_at(int dx, int dy) const {
  if (std::abs(dx) > radius_steps_ || std::abs(dy) > radius_steps_) return -1;
  const std::size_t row = static_cast<std::size_t>(radius_steps_ - dy);
  const std::size_t col = static_cast<std::size_t>(dx + radius_steps_);
  return labels_[row * static_cast<std::size_t>(width_) + col];
}

std::optional<int> DigitalDisc::label(Point p) const {
  const std::int32_t v = label_at(p.x - center_.x, p.y - center_.y);
  if (v < 0) return std::nullopt;
  return v;
}

bool DigitalDisc::contains(Point p) const { return label(p).has_value(); }

DigitalDisc generate_disc(Point center, int radius_steps, const NeighbourhoodSequence& seq,
                          Execution exec) {
  if (radius_steps < 0) {
    throw std::invalid_argument("radius_steps must be nonnegative");
  }
  const int k = radius_steps;
  const int width = 2 * k + 1;
  std::vector<std::int32_t> labels(static_cast<std::size_t>(width) * width, -1);
  const std::vector<int> reach = steps_to_reach(seq, 2 * k);

  const bool parallel = exec == Execution::parallel;
  #pragma omp parallel for if (parallel) schedule(static)
  for (int row = 0; row < width; ++row) {
    const int dy = k - row;
    const int y = std::abs(dy);
    std::int32_t* out = labels.data() + static_cast<std::size_t>(row) * width;
    for (int col = 0; col < width; ++col) {
      const int x = std::abs(col - k);
      const int d = std::max(std::max(x, y), reach[static_cast<std::size_t>(x + y)]);
      if (d <= k) out[col] = d;
    }
  }
  return DigitalDisc(center, k, std::move(labels));
}

DigitalDisc generate_disc_bfs(Point center, int radius_steps, const NeighbourhoodSequence& seq) {
  if (radius_steps < 0) {
    throw std::invalid_argument("radius_steps must be nonnegative");
  }
  const int k = radius_steps;
  const int width = 2 * k + 1;
  std::vector<std::int32_t> labels(static_cast<std::size_t>(width) * width, -1);
  const auto at = [&](int dx, int dy) {
    return static_cast<std::size_t>(k - dy) * width + static_cast<std::size_t>(dx + k);
  };

  labels[at(0, 0)] = 0;
  std::vector<Offset> frontier{{0, 0}}, next;
  for (int step = 1; step <= k; ++step) {
    next.clear();
    const auto moves = offsets_for(seq.element(step));
    for (const Offset& o : frontier) {
      for (const Offset& mv : moves) {
        const int nx = o.dx + mv.dx;
        const int ny = o.dy + mv.dy;
        if (std::abs(nx) > k || std::abs(ny) > k) continue;
        std::int32_t& cell = labels[at(nx, ny)];
        if (cell >= 0) continue;
        cell = step;
        next.push_back({nx, ny});
      }
    }
    frontier.swap(next);
  }
  return DigitalDisc(center, k, std::move(labels));
}

}  // namespace nsdisc
