// Benchmark: serial reference vs OpenMP cell sweeps on the exact kernels.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gasket/piecewise.hpp"
#include "gasket/sweep.hpp"

using namespace gasket;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int level = argc > 1 ? std::atoi(argv[1]) : 12;
  std::printf("cell sweep benchmark, level %d (%.0f cells), %d thread(s)\n",
              level, std::pow(3.0, level), sweep::max_threads());

  const Piecewise h(Harmonic(Rat(1), Rat(0), Rat(0)));
  const Piecewise psi = Piecewise::loop_potential(Word("0"));

  {
    auto t0 = std::chrono::steady_clock::now();
    const Rat serial = h.graph_energy_serial(level);
    const double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const Rat parallel = h.graph_energy(level);
    const double tp = ms_since(t0);
    std::printf("graph energy E_%d(h):    serial %8.1f ms   parallel %8.1f ms   "
                "speedup %.2fx   equal %s\n",
                level, ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    const Rat serial = psi.graph_energy_serial(level);
    const double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const Rat parallel = psi.graph_energy(level);
    const double tp = ms_since(t0);
    std::printf("graph energy E_%d(psi):  serial %8.1f ms   parallel %8.1f ms   "
                "speedup %.2fx   equal %s\n",
                level, ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  }
  {
    // pairwise sweep: energy measure of a mixed pair at depth `level`
    const Harmonic a(Rat(1), Rat(0), Rat(0));
    const Harmonic b(Rat(0), Rat(1), Rat(-1));
    auto t0 = std::chrono::steady_clock::now();
    const Rat serial = sweep::reduce_pair_serial(
        a, b, level, [](const Harmonic& x, const Harmonic& y) {
          return x.energy_pair(y);
        });
    const double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const Rat parallel = sweep::reduce_pair_parallel(
        a, b, level, [](const Harmonic& x, const Harmonic& y) {
          return x.energy_pair(y);
        });
    const double tp = ms_since(t0);
    std::printf("pair sweep at level %d:  serial %8.1f ms   parallel %8.1f ms   "
                "speedup %.2fx   equal %s\n",
                level, ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  }
  return 0;
}
