#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nsdisc/ns_core.hpp"

using nsdisc::DigitalDisc;
using nsdisc::NeighbourhoodSequence;
using nsdisc::Point;

namespace {

NeighbourhoodSequence random_sequence(std::mt19937& rng) {
  std::uniform_int_distribution<int> len_dist(1, 8);
  std::uniform_int_distribution<int> value_dist(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> prefix(static_cast<std::size_t>(len_dist(rng)));
  for (int& v : prefix) v = value_dist(rng);
  if (coin(rng)) return NeighbourhoodSequence::periodic(std::move(prefix));
  return NeighbourhoodSequence::with_constant_tail(std::move(prefix), value_dist(rng));
}

}  // namespace

TEST_CASE("j-neighbour relation") {
  CHECK_FALSE(nsdisc::is_j_neighbour({0, 0}, {1, 1}, 1));
  CHECK(nsdisc::is_j_neighbour({0, 0}, {1, 1}, 2));
  CHECK(nsdisc::is_j_neighbour({0, 0}, {0, 0}, 1));
  CHECK_FALSE(nsdisc::is_j_neighbour({0, 0}, {2, 0}, 2));
  CHECK(nsdisc::is_j_neighbour({5, -3}, {4, -3}, 1));
  CHECK(nsdisc::is_j_neighbour({5, -3}, {4, -2}, 2));
  CHECK_THROWS_AS(nsdisc::is_j_neighbour({0, 0}, {0, 0}, 3), std::invalid_argument);
}

TEST_CASE("sequence elements follow the prefix and tail rules") {
  const auto periodic = NeighbourhoodSequence::periodic({2, 2, 2, 1});
  CHECK(periodic.element(1) == 2);
  CHECK(periodic.element(4) == 1);
  CHECK(periodic.element(6) == 2);
  CHECK(periodic.element(8) == 1);

  const auto tailed = NeighbourhoodSequence::with_constant_tail({1}, 2);
  CHECK(tailed.element(1) == 1);
  CHECK(tailed.element(100) == 2);

  CHECK(NeighbourhoodSequence::constant(2).element(1000000) == 2);

  CHECK_THROWS_AS(periodic.element(0), std::invalid_argument);
  CHECK_THROWS_AS(NeighbourhoodSequence::periodic({}), std::invalid_argument);
  CHECK_THROWS_AS(NeighbourhoodSequence::periodic({3}), std::invalid_argument);
  CHECK_THROWS_AS(NeighbourhoodSequence::with_constant_tail({1}, 0), std::invalid_argument);
}

TEST_CASE("path validity checks each step against its neighbourhood") {
  const std::vector<Point> diagonal{{0, 0}, {1, 1}};
  CHECK(nsdisc::is_valid_path(diagonal, NeighbourhoodSequence::constant(2)));
  CHECK_FALSE(nsdisc::is_valid_path(diagonal, NeighbourhoodSequence::constant(1)));

  const std::vector<Point> two_steps{{0, 0}, {1, 0}, {2, 1}};
  CHECK(nsdisc::is_valid_path(two_steps, NeighbourhoodSequence::periodic({1, 2})));
  CHECK_FALSE(nsdisc::is_valid_path(two_steps, NeighbourhoodSequence::constant(1)));

  const std::vector<Point> jump{{0, 0}, {2, 0}};
  CHECK_FALSE(nsdisc::is_valid_path(jump, NeighbourhoodSequence::constant(2)));

  const std::vector<Point> single{{3, 4}};
  CHECK(nsdisc::is_valid_path(single, NeighbourhoodSequence::constant(1)));

  const std::vector<Point> empty;
  CHECK_THROWS_AS(nsdisc::is_valid_path(empty, NeighbourhoodSequence::constant(1)),
                  std::invalid_argument);
}

TEST_CASE("distance worked cases") {
  const auto city = NeighbourhoodSequence::constant(1);
  const auto chess = NeighbourhoodSequence::constant(2);
  const auto alternating = NeighbourhoodSequence::periodic({1, 2});

  CHECK(nsdisc::ns_distance_bfs({0, 0}, {3, 2}, city) == 5);
  CHECK(nsdisc::ns_distance_bfs({0, 0}, {3, 2}, chess) == 3);
  CHECK(nsdisc::ns_distance_bfs({0, 0}, {4, 3}, alternating) == 5);

  CHECK(nsdisc::ns_distance({0, 0}, {3, 2}, city) == 5);
  CHECK(nsdisc::ns_distance({0, 0}, {3, 2}, chess) == 3);
  CHECK(nsdisc::ns_distance({0, 0}, {4, 3}, alternating) == 5);

  CHECK(nsdisc::ns_distance({2, -1}, {2, -1}, alternating) == 0);
  CHECK(nsdisc::ns_distance({5, 5}, {2, 1}, alternating) ==
        nsdisc::ns_distance({2, 1}, {5, 5}, alternating));
  CHECK(nsdisc::ns_distance({-7, 3}, {1, -2}, chess) == 8);
}

TEST_CASE("closed form agrees with the wavefront reference on random sequences") {
  std::mt19937 rng(1234);
  int mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq = random_sequence(rng);
    const auto reference = nsdisc::generate_disc_bfs({0, 0}, 16, seq);
    for (int dy = -8; dy <= 8; ++dy) {
      for (int dx = -8; dx <= 8; ++dx) {
        if (nsdisc::ns_distance({0, 0}, {dx, dy}, seq) != reference.label_at(dx, dy)) {
          ++mismatches;
        }
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("point-to-point wavefront agrees with the disc labelling") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seq = random_sequence(rng);
    const auto disc = nsdisc::generate_disc_bfs({0, 0}, 10, seq);
    for (int dy = -5; dy <= 5; ++dy) {
      for (int dx = -5; dx <= 5; ++dx) {
        REQUIRE(nsdisc::ns_distance_bfs({0, 0}, {dx, dy}, seq) == disc.label_at(dx, dy));
      }
    }
  }
}

TEST_CASE("distance respects chessboard and city-block bounds") {
  std::mt19937 rng(4321);
  std::uniform_int_distribution<int> offset(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto seq = random_sequence(rng);
    const int dx = offset(rng);
    const int dy = offset(rng);
    const int d = nsdisc::ns_distance({0, 0}, {dx, dy}, seq);
    CHECK(d >= std::max(std::abs(dx), std::abs(dy)));
    CHECK(d <= std::abs(dx) + std::abs(dy));
  }
}

TEST_CASE("reference discs of radius 4") {
  const auto mostly_chess = nsdisc::generate_disc({0, 0}, 4, NeighbourhoodSequence::periodic({2, 2, 2, 1}));
  CHECK(mostly_chess.point_count() == 77);

  const auto mostly_city = nsdisc::generate_disc({0, 0}, 4, NeighbourhoodSequence::periodic({1, 1, 2, 1}));
  CHECK(mostly_city.point_count() == 57);

  const auto single = nsdisc::generate_disc({0, 0}, 0, NeighbourhoodSequence::constant(2));
  CHECK(single.point_count() == 1);
  CHECK(single.label({0, 0}) == 0);
  CHECK_FALSE(single.contains({1, 0}));
}

TEST_CASE("disc labels are exact distances") {
  const auto seq = NeighbourhoodSequence::periodic({2, 1});
  const auto disc = nsdisc::generate_disc({3, -2}, 6, seq);
  CHECK(disc.label({3, -2}) == 0);
  for (int dy = -6; dy <= 6; ++dy) {
    for (int dx = -6; dx <= 6; ++dx) {
      const int d = nsdisc::ns_distance({3, -2}, {3 + dx, -2 + dy}, seq);
      const auto expected = d <= 6 ? std::optional<int>(d) : std::nullopt;
      REQUIRE(disc.label({3 + dx, -2 + dy}) == expected);
    }
  }
}

TEST_CASE("each wavefront layer touches the previous one") {
  const auto seq = NeighbourhoodSequence::periodic({2, 1, 2});
  const auto disc = nsdisc::generate_disc({0, 0}, 9, seq);
  int orphans = 0;
  for (int dy = -9; dy <= 9; ++dy) {
    for (int dx = -9; dx <= 9; ++dx) {
      const int m = disc.label_at(dx, dy);
      if (m <= 0) continue;
      const int reach = seq.element(m);
      bool touched = false;
      for (int oy = -1; oy <= 1 && !touched; ++oy) {
        for (int ox = -1; ox <= 1 && !touched; ++ox) {
          if (std::abs(ox) + std::abs(oy) == 0 || std::abs(ox) + std::abs(oy) > reach) continue;
          touched = disc.label_at(dx + ox, dy + oy) == m - 1;
        }
      }
      if (!touched) ++orphans;
    }
  }
  CHECK(orphans == 0);
}

TEST_CASE("discs are nested as the step budget grows") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_sequence(rng);
    auto prev = nsdisc::generate_disc({0, 0}, 0, seq);
    for (int k = 1; k <= 7; ++k) {
      const auto disc = nsdisc::generate_disc({0, 0}, k, seq);
      for (int dy = -(k - 1); dy <= k - 1; ++dy) {
        for (int dx = -(k - 1); dx <= k - 1; ++dx) {
          if (prev.label_at(dx, dy) >= 0) REQUIRE(disc.label_at(dx, dy) >= 0);
        }
      }
      prev = disc;
    }
  }
}

TEST_CASE("discs carry the dihedral symmetry of the grid") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_sequence(rng);
    const auto disc = nsdisc::generate_disc({0, 0}, 8, seq);
    for (int dy = -8; dy <= 8; ++dy) {
      for (int dx = -8; dx <= 8; ++dx) {
        const auto v = disc.label_at(dx, dy);
        REQUIRE(v == disc.label_at(-dx, dy));
        REQUIRE(v == disc.label_at(dx, -dy));
        REQUIRE(v == disc.label_at(dy, dx));
      }
    }
  }
}

TEST_CASE("serial, parallel and wavefront disc generation coincide") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    const auto seq = random_sequence(rng);
    const auto serial = nsdisc::generate_disc({0, 0}, 25, seq, nsdisc::Execution::serial);
    const auto parallel = nsdisc::generate_disc({0, 0}, 25, seq, nsdisc::Execution::parallel);
    const auto reference = nsdisc::generate_disc_bfs({0, 0}, 25, seq);
    CHECK(serial == parallel);
    CHECK(serial == reference);
  }
}

TEST_CASE("disc accessors validate their input") {
  const auto disc = nsdisc::generate_disc({0, 0}, 2, NeighbourhoodSequence::constant(1));
  CHECK(disc.label_at(3, 0) == -1);
  CHECK(disc.label_at(0, -3) == -1);
  CHECK_FALSE(disc.contains({3, 0}));
  CHECK_THROWS_AS(nsdisc::generate_disc({0, 0}, -1, NeighbourhoodSequence::constant(1)),
                  std::invalid_argument);
}
