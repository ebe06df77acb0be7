// Benchmark: OpenMP kernels against their serial reference counterparts.
// Two kernels are parallel: the vertex-pair apex scan and the sharded
// enumeration. Prints wall times and the speedup ratio.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "knot21/catalog.hpp"
#include "knot21/enumerate.hpp"
#include "knot21/planarity.hpp"

using namespace knot21;

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  if (threads == 1)
    std::printf("note: single hardware thread; parallel kernels pay their overhead "
                "with no win\n");

  // apex scan over the 14-member family, repeated for stable numbers
  const int kReps = 5;
  double serial = time_of([&] {
    for (int r = 0; r < kReps; ++r)
      for (const NamedGraph& ng : k7_family()) apex_witness_serial(ng.graph, 2);
  });
  double parallel = time_of([&] {
    for (int r = 0; r < kReps; ++r)
      for (const NamedGraph& ng : k7_family()) apex_witness(ng.graph, 2);
  });
  std::printf("apex scan        serial %.3fs  parallel %.3fs  speedup %.2fx\n", serial,
              parallel, serial / parallel);
  std::fflush(stdout);

  // enumeration of two mid-size degree cases; the largest verification cases
  // take minutes serially and don't change the picture
  const int shards = 4 * threads;
  for (const char* degrees : {"3^14", "4^4,3^8"}) {
    DegreeSpec s;
    s.degrees = parse_degrees(degrees);
    std::size_t n_serial = 0, n_parallel = 0;
    double t_serial = time_of([&] { n_serial = enumerate_to_vector(s).size(); });
    double t_parallel =
        time_of([&] { n_parallel = enumerate_sharded(s, shards, true).size(); });
    std::printf("enum %-9s    serial %.3fs  parallel %.3fs  speedup %.2fx  (%zu = %zu classes)\n",
                degrees, t_serial, t_parallel, t_serial / t_parallel, n_serial, n_parallel);
    std::fflush(stdout);
  }
  return 0;
}
