// serial reference vs OpenMP wavefront integrator timing on the psi integrand
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "syz/disks.hpp"
#include "syz/reduced_area.hpp"

using namespace syz;

static double wall_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  ParamSet P = ParamSet::reference_a2();
  struct Case {
    double s, r, tol;
  } cases[] = {
      {0.5, 2.5, 1e-8}, {0.0, 2.5, 1e-8}, {0.0, 4.0, 1e-9}, {-0.01, 4.0, 1e-9}};

  std::printf("%8s %6s %8s | %12s %9s | %12s %9s | %7s\n", "s", "r", "tol",
              "parallel", "time", "serial", "time", "speedup");
  for (const Case& c : cases) {
    double t0 = wall_s();
    QuadResult qa = psi_quad(c.s, c.r, P, c.tol, /*parallel=*/true);
    double ta = wall_s() - t0;

    t0 = wall_s();
    double vb = psi_serial(c.s, c.r, P, c.tol);
    double tb = wall_s() - t0;

    std::printf("%8.2f %6.2f %8.0e | %12.8f %8.3fs | %12.8f %8.3fs | %6.2fx\n",
                c.s, c.r, c.tol, qa.value, ta, vb, tb, tb / ta);
  }

  // disk areas exercise the same two integrators on a different integrand
  for (int k : {1, 2, 3}) {
    DiskMap d = disk_beta(k, {}, P);
    double t0 = wall_s();
    double va = disk_area(d, 1e-8);
    double ta = wall_s() - t0;
    t0 = wall_s();
    double vb = disk_area_serial(d, 1e-8);
    double tb = wall_s() - t0;
    std::printf("disk beta_%d area: parallel %12.8f %8.3fs | serial %12.8f %8.3fs | %5.2fx\n",
                k, va, ta, vb, tb, tb / ta);
  }
  return 0;
}
