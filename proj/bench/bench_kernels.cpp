// Timing comparison of the disc-labelling kernels (closed-form serial,
// closed-form parallel, wavefront reference) and of the radius sweep.

#include <chrono>
#include <cstdio>
#include <vector>

#include "nsdisc/approx.hpp"
#include "nsdisc/ns_core.hpp"

using nsdisc::DigitalDisc;
using nsdisc::Execution;
using nsdisc::NeighbourhoodSequence;

namespace {

template <typename F>
double time_best_of(int repeats, F&& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds < best) best = seconds;
  }
  return best;
}

}  // namespace

int main() {
  const auto seq = NeighbourhoodSequence::periodic({2, 2, 1, 2, 1});

  std::printf("disc labelling, grid (2k+1)^2, best of 3 runs\n");
  std::printf("%8s %14s %14s %14s %9s\n", "k", "serial (s)", "parallel (s)", "wavefront (s)",
              "speedup");
  for (int k : {200, 400, 800, 1600}) {
    const DigitalDisc serial = nsdisc::generate_disc({0, 0}, k, seq, Execution::serial);
    const DigitalDisc parallel = nsdisc::generate_disc({0, 0}, k, seq, Execution::parallel);
    const DigitalDisc reference = nsdisc::generate_disc_bfs({0, 0}, k, seq);
    if (!(serial == parallel && serial == reference)) {
      std::printf("kernel outputs disagree at k = %d\n", k);
      return 1;
    }
    const double t_serial =
        time_best_of(3, [&] { nsdisc::generate_disc({0, 0}, k, seq, Execution::serial); });
    const double t_parallel =
        time_best_of(3, [&] { nsdisc::generate_disc({0, 0}, k, seq, Execution::parallel); });
    const double t_bfs = time_best_of(3, [&] { nsdisc::generate_disc_bfs({0, 0}, k, seq); });
    std::printf("%8d %14.4f %14.4f %14.4f %8.1fx\n", k, t_serial, t_parallel, t_bfs,
                t_serial / t_parallel);
  }

  std::printf("\nradius sweep, six methods per radius, best of 3 runs\n");
  std::printf("%8s %14s %14s %9s\n", "radii", "serial (s)", "parallel (s)", "speedup");
  for (double rmax : {2000.0, 20000.0}) {
    const auto serial =
        nsdisc::sweep_series(nsdisc::DescriptorKind::inner_hull, 0.5, rmax, 0.125, Execution::serial);
    const auto parallel = nsdisc::sweep_series(nsdisc::DescriptorKind::inner_hull, 0.5, rmax, 0.125,
                                               Execution::parallel);
    if (serial.size() != parallel.size()) {
      std::printf("sweep sizes disagree\n");
      return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
      for (std::size_t m = 0; m < 6; ++m) {
        if (serial[i].by_method[m].k1 != parallel[i].by_method[m].k1 ||
            serial[i].by_method[m].k2 != parallel[i].by_method[m].k2) {
          std::printf("sweep outputs disagree at row %zu\n", i);
          return 1;
        }
      }
    }
    const double t_serial = time_best_of(3, [&] {
      nsdisc::sweep_series(nsdisc::DescriptorKind::inner_hull, 0.5, rmax, 0.125, Execution::serial);
    });
    const double t_parallel = time_best_of(3, [&] {
      nsdisc::sweep_series(nsdisc::DescriptorKind::inner_hull, 0.5, rmax, 0.125,
                           Execution::parallel);
    });
    std::printf("%8zu %14.4f %14.4f %8.1fx\n", serial.size(), t_serial, t_parallel,
                t_serial / t_parallel);
  }
  return 0;
}
