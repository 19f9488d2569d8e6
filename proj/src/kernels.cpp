#include "ellchar/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace ellchar {

int kernel_threads() {
  if (const char* s = std::getenv("ELLCHAR_THREADS")) {
    try {
      int n = std::stoi(s);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace {

void fill_column(const FinGroup& g, int l, int k, std::vector<long>& a) {
  const int gl = g.class_rep(l);
  for (int x = 0; x < g.order(); ++x) {
    int i = g.class_of(x);
    int j = g.class_of(g.mul(g.inv(x), gl));
    ++a[(static_cast<std::size_t>(i) * k + j) * k + l];
  }
}

}  // namespace

std::vector<long> class_structure_constants(const FinGroup& g, Exec exec) {
  const int k = g.num_classes();
  std::vector<long> a(static_cast<std::size_t>(k) * k * k, 0);
  if (exec == Exec::Serial) {
    for (int l = 0; l < k; ++l) fill_column(g, l, k, a);
    return a;
  }
  // Columns l are disjoint slices of a, so threads never share a cell.
#pragma omp parallel for schedule(dynamic) num_threads(kernel_threads())
  for (int l = 0; l < k; ++l) fill_column(g, l, k, a);
  return a;
}

}  // namespace ellchar
