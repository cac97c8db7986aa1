#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nsdisc {

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class TailRule { periodic, constant };

/// An infinite {1,2}-valued sequence stored as a finite prefix plus a tail
/// rule: either the prefix repeats periodically or the sequence continues
/// with a constant value. Element access is total for every index i >= 1.
class NeighbourhoodSequence {
 public:
  static NeighbourhoodSequence periodic(std::vector<int> prefix);
  static NeighbourhoodSequence with_constant_tail(std::vector<int> prefix, int tail_value);
  static NeighbourhoodSequence constant(int value);

  /// b_i for 1-based i; throws std::invalid_argument for i < 1.
  int element(std::int64_t i) const;

  const std::vector<int>& prefix() const { return prefix_; }
  TailRule tail() const { return tail_; }
  int tail_value() const { return tail_value_; }

  std::string to_string() const;

 private:
  NeighbourhoodSequence(std::vector<int> prefix, TailRule tail, int tail_value);

  std::vector<int> prefix_;
  TailRule tail_ = TailRule::periodic;
  int tail_value_ = 1;  // used only by constant tails
};

/// True iff p and q differ by at most 1 in each coordinate and by at most j
/// in total. Every point is a j-neighbour of itself.
bool is_j_neighbour(Point p, Point q, int j);

/// True iff consecutive points are b_i-neighbours for i = 1..m.
bool is_valid_path(std::span<const Point> points, const NeighbourhoodSequence& seq);

/// Exact shortest-path length by breadth-first wavefront expansion where
/// step i uses the b_i-neighbourhood. Serial reference; ground truth for
/// ns_distance and the disc generators.
int ns_distance_bfs(Point p, Point q, const NeighbourhoodSequence& seq);

/// Closed-form distance: with x = |dx|, y = |dy|,
///   max( max(x, y), min{ m : b_1 + ... + b_m >= x + y } ).
/// Agrees with ns_distance_bfs on all inputs.
int ns_distance(Point p, Point q, const NeighbourhoodSequence& seq);

enum class Execution { serial, parallel };

/// All lattice points within radius_steps of a center, labelled with their
/// exact distance. Stored as a dense (2k+1)^2 grid; -1 marks points outside
/// the disc.
class DigitalDisc {
 public:
  DigitalDisc(Point center, int radius_steps, std::vector<std::int32_t> labels);

  Point center() const { return center_; }
  int radius_steps() const { return radius_steps_; }
  int width() const { return width_; }

  std::optional<int> label(Point p) const;
  bool contains(Point p) const;
  std::size_t point_count() const { return point_count_; }

  /// Label at offset (dx, dy) from the center; -1 outside the disc or the
  /// bounding box.
  std::int32_t label_at(int dx, int dy) const;

  /// Row-major grid, row 0 at dy = +radius_steps.
  const std::vector<std::int32_t>& grid() const { return labels_; }

  friend bool operator==(const DigitalDisc&, const DigitalDisc&) = default;

 private:
  Point center_;
  int radius_steps_ = 0;
  int width_ = 1;
  std::vector<std::int32_t> labels_;
  std::size_t point_count_ = 0;
};

/// Disc of radius_steps steps around center: every point at distance <= k is
/// labelled with its distance. Closed-form per-point kernel, row-parallel
/// under OpenMP when exec is Execution::parallel.
DigitalDisc generate_disc(Point center, int radius_steps, const NeighbourhoodSequence& seq,
                          Execution exec = Execution::parallel);

/// Serial wavefront reference for generate_disc.
DigitalDisc generate_disc_bfs(Point center, int radius_steps, const NeighbourhoodSequence& seq);

}  // namespace nsdisc
