// Timing comparison of the OpenMP kernels against their serial reference
// implementations, with an equality check on every result.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/loci.hpp"
#include "tuttekit/specializations.hpp"
#include "tuttekit/tutte_engine.hpp"

using namespace tk;

namespace {

double run_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms, parallel_ms;
  bool equal;
};

}  // namespace

int main() {
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::vector<Row> rows;

  {
    Multigraph g = sq_strip(2, 7, Bc::Free, Bc::Free);  // 19 edges
    BiPoly a, b;
    double ts = run_ms([&] { a = tutte_oracle_serial(g).polynomial; });
    double tp = run_ms([&] { b = tutte_oracle(g).polynomial; });
    rows.push_back({"subset tally (19 edges)", ts, tp, a == b});
  }
  {
    Multigraph g = sq_strip(2, 6, Bc::Free, Bc::Free);  // 16 edges
    Int a, b;
    double ts = run_ms([&] { a = acyclic_oracle_serial(g); });
    double tp = run_ms([&] { b = acyclic_oracle(g); });
    rows.push_back({"orientation scan (16 edges)", ts, tp, a == b});
  }
  {
    Multigraph g = sq_strip(2, 6, Bc::Free, Bc::Free);
    Rat a, b, p(1, 2);
    double ts = run_ms([&] { a = reliability_oracle_serial(g, p); });
    double tp = run_ms([&] { b = reliability_oracle(g, p); });
    rows.push_back({"reliability sum (16 edges)", ts, tp, a == b});
  }
  {
    Multigraph g = sq_strip(2, 5, Bc::Free, Bc::Free);  // 10 vertices
    Int a, b;
    double ts = run_ms([&] { a = chromatic_oracle_serial(g, 5); });
    double tp = run_ms([&] { b = chromatic_oracle(g, 5); });
    rows.push_back({"coloring scan (10 vertices, q=5)", ts, tp, a == b});
  }
  {
    auto f = [](Cx q) { return flow_lambda_values_r2(q); };
    Window w{-2, 6, -4, 4};
    LocusOptions opt;
    opt.res = 160;
    std::vector<LocusPoint> a, b;
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    double ts = run_ms([&] { a = equimodular_locus(f, w, opt); });
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    double tp = run_ms([&] { b = equimodular_locus(f, w, opt); });
    bool eq = a.size() == b.size();
    for (size_t i = 0; eq && i < a.size(); ++i)
      eq = a[i].q == b[i].q && a[i].id_a == b[i].id_a && a[i].id_b == b[i].id_b;
    rows.push_back({"boundary grid scan (res 160)", ts, tp, eq});
  }

  std::printf("threads: %d\n", threads);
  std::printf("%-34s %10s %10s %8s  %s\n", "kernel", "serial/ms", "openmp/ms",
              "speedup", "equal");
  bool all_equal = true;
  for (const auto& r : rows) {
    std::printf("%-34s %10.1f %10.1f %7.2fx  %s\n", r.name.c_str(), r.serial_ms,
                r.parallel_ms, r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1),
                r.equal ? "yes" : "NO");
    all_equal = all_equal && r.equal;
  }
  std::printf(all_equal ? "all kernels agree\n" : "KERNEL MISMATCH\n");
  return all_equal ? 0 : 1;
}
