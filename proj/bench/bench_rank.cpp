// Timing comparison of the two elimination kernels on random sparse rational
// matrices: the OpenMP fraction-free rank() against the plain rational
// Gauss-Jordan rank_serial(). Also cross-checks that they agree, so a run
// doubles as a smoke test. Matrix sizes are kept in the range the library
// actually produces (homogeneous-degree blocks and oracle systems).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>

#include "sl3ido/matrix.hpp"

using namespace sl3ido;

namespace {

RatMatrix random_sparse(std::mt19937& gen, int rows, int cols, double density) {
  RatMatrix m(rows, cols);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (coin(gen) < density) m.set(r, c, rat(num(gen), den(gen)));
  return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int max_size = argc > 1 ? std::atoi(argv[1]) : 160;
  std::mt19937 gen(7);

  std::cout << "size   density   nnz      rank   parallel_ms   serial_ms\n";
  for (int n = 20; n <= max_size; n *= 2) {
    for (double density : {0.08, 0.3}) {
      const RatMatrix m = random_sparse(gen, n, n + n / 4, density);
      int rk_par = 0, rk_ser = 0;
      const int reps = n <= 40 ? 5 : 1;
      const double par = time_ms([&] { rk_par = m.rank(); }, reps);
      const double ser = time_ms([&] { rk_ser = m.rank_serial(); }, reps);
      if (rk_par != rk_ser) {
        std::cerr << "rank disagreement: " << rk_par << " vs " << rk_ser
                  << " on a " << n << "x" << (n + n / 4) << " matrix\n";
        return 1;
      }
      std::printf("%-6d %-9.2f %-8ld %-6d %-13.3f %-10.3f\n", n, density,
                  m.nnz(), rk_par, par, ser);
    }
  }
  return 0;
}
