// SPDX-License-Identifier: Apache-2.0

// Timing comparison between the serial reference kernels and their
// OpenMP-parallel counterparts.

#include <chrono>
#include <cstdio>

#include "mpnormal/composite_spectrum.hpp"
#include "mpnormal/config.hpp"
#include "mpnormal/validation_oracle.hpp"

namespace {

using namespace mpnormal;

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-32s serial %8.4fs  openmp %8.4fs  speedup %.2fx\n", name,
              serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", par::thread_count());

  const ProblemConfig c = make_preset("diag-2x2");

  {
    const std::size_t samples = 2'000'000;
    const double s = time_seconds([&] {
      full_halfline_spectrum(c.problem, c.extension, samples, 1, par::Mode::Serial);
    });
    const double p = time_seconds([&] {
      full_halfline_spectrum(c.problem, c.extension, samples, 1, par::Mode::OpenMP);
    });
    report("halfline grid certificate", s, p);
  }

  {
    TestFunction f(IntervalTag::Left, 0.0,
                   {{Complex{0.25, 1.0}, Vector::Ones(8)},
                    {Complex{0.5, -2.0}, 0.5 * Vector::Ones(8)}});
    const double t0 = -400.0, t1 = 0.0;
    double vs = 0.0, vp = 0.0;
    const double s = time_seconds([&] {
      for (int i = 0; i < 200; ++i) vs = quadrature_l2(f, t0, t1, par::Mode::Serial);
    });
    const double p = time_seconds([&] {
      for (int i = 0; i < 200; ++i) vp = quadrature_l2(f, t0, t1, par::Mode::OpenMP);
    });
    report("composite quadrature", s, p);
    std::printf("  (values agree to %.3g)\n", vs - vp);
  }

  return 0;
}
