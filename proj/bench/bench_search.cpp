// Serial reference vs OpenMP kernels for enumeration, orbit reduction and the
// φ-ansatz sweep. Usage: bench_search [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "postlie/catalog.hpp"
#include "postlie/search.hpp"

using namespace postlie;

namespace {

double seconds(const std::function<std::size_t()>& work, int repeats, std::size_t& result) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    result = work();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void compare(const std::string& name, const std::function<std::size_t(Execution)>& work,
             int repeats) {
  std::size_t serial_result = 0, one_result = 0, parallel_result = 0;
  double serial = seconds([&] { return work(Execution::Serial); }, repeats, serial_result);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  double one = seconds([&] { return work(Execution::Parallel); }, repeats, one_result);
  omp_set_num_threads(threads);
  double parallel = seconds([&] { return work(Execution::Parallel); }, repeats, parallel_result);
  std::cout << std::left << std::setw(44) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(11) << serial << std::setw(11) << one << std::setw(11) << parallel
            << std::setw(9) << std::setprecision(1) << serial / parallel << "x"
            << (serial_result == parallel_result && one_result == parallel_result ? "  ok" : "  MISMATCH")
            << "\n";
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::cout << "threads: " << omp_get_max_threads() << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(44) << "workload" << std::right << std::setw(11) << "serial"
            << std::setw(11) << "kernel x1" << std::setw(11) << "kernel xN" << std::setw(10)
            << "speedup" << "\n";

  auto f3 = Field::prime(3), f5 = Field::prime(5);
  compare("enumerate dim 2, p=3, all products (r2, r2)",
          [&](Execution e) {
            return enumerate_products({r2_algebra(f3), r2_algebra(f3), SearchMode::AllProducts}, e).size();
          },
          repeats);
  compare("enumerate dim 2, p=5, symmetric (ab, ab)",
          [&](Execution e) {
            return enumerate_products({abelian_algebra(f5, 2), abelian_algebra(f5, 2)}, e).size();
          },
          repeats);
  auto f2 = Field::prime(2);
  compare("enumerate dim 3, p=2, symmetric (n3, n3)",
          [&](Execution e) { return enumerate_products({n3_algebra(f2), n3_algebra(f2)}, e).size(); },
          repeats);

  auto hits = enumerate_products({abelian_algebra(f5, 2), abelian_algebra(f5, 2)});
  compare("orbit_reduce Case 1 hits over F5",
          [&](Execution e) {
            return orbit_reduce(hits, abelian_algebra(f5, 2), abelian_algebra(f5, 2),
                                default_search_guard, e)
                .size();
          },
          repeats);

  auto sl2 = sl2_algebra(f5);
  compare("phi sweep sl2(F5), first 100000 endomorphisms",
          [&](Execution e) { return phi_sweep(sl2, 0, 100000, e).size(); }, repeats);
}
