// Times the serial reference row reducer against the OpenMP kernel on sparse
// random rational matrices shaped like tangent-space workloads, and checks
// that both produce the identical canonical form.
//
// Usage: bench_rref [rows cols]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crosscap/rref.hpp"

using crosscap::Rat;
using crosscap::RatRow;

namespace {

std::vector<RatRow> random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<RatRow> m(rows, RatRow(cols, Rat(0)));
  for (RatRow& r : m)
    for (Rat& x : r)
      if (gen() % 4 == 0) {  // ~25% fill, like jet-module product rows
        long num = static_cast<long>(gen() % 19) - 9;
        long den = 1 + static_cast<long>(gen() % 4);
        if (num != 0) x = crosscap::rat(num, den);
      }
  return m;
}

double elapsed(std::vector<int> (*f)(std::vector<RatRow>&),
               std::vector<RatRow>& m) {
  auto t0 = std::chrono::steady_clock::now();
  f(m);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP: both kernels run serially\n");
#endif

  struct Shape {
    int rows, cols;
  };
  std::vector<Shape> shapes = {{60, 100}, {100, 175}, {140, 245}};
  if (argc == 3)
    shapes = {{std::atoi(argv[1]), std::atoi(argv[2])}};

  std::printf("%6s %6s %12s %12s %9s %10s\n", "rows", "cols", "serial(s)",
              "parallel(s)", "speedup", "identical");
  for (const Shape& s : shapes) {
    std::vector<RatRow> a = random_matrix(s.rows, s.cols, 271828u);
    std::vector<RatRow> b = a;
    double ts = elapsed(crosscap::rref_serial, a);
    double tp = elapsed(crosscap::rref_parallel, b);
    std::printf("%6d %6d %12.3f %12.3f %9.2f %10s\n", s.rows, s.cols, ts, tp,
                tp > 0 ? ts / tp : 0.0, a == b ? "yes" : "NO");
    if (a != b) return 1;
  }
  return 0;
}
