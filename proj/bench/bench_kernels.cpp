// Serial reference against the OpenMP kernels: class structure constants and
// the Pin cocycle fill.

#include <chrono>
#include <cstdio>
#include <functional>

#include "ellchar/model.hpp"

using namespace ellchar;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* what, const char* group, double serial, double parallel, bool same) {
  std::printf("%-22s %-6s serial %8.3fs  parallel %8.3fs  speedup %5.2f  %s\n", what, group, serial, parallel,
              serial / parallel, same ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", kernel_threads());
  const std::pair<CartanType, int> types[] = {{CartanType::B, 4}, {CartanType::D, 4}, {CartanType::F, 4}};
  bool ok = true;
  for (auto [type, rank] : types) {
    auto m = Model::build(type, rank);
    const std::string name = m.weyl->roots().name();

    const FinGroup& wt = m.pin->prime();
    std::vector<long> a, b;
    const double ts = seconds([&] { a = class_structure_constants(wt, Exec::Serial); });
    const double tp = seconds([&] { b = class_structure_constants(wt, Exec::Parallel); });
    row("structure constants", name.c_str(), ts, tp, a == b);
    ok = ok && a == b;

    const FinGroup& g = m.weyl->group();
    std::vector<Multivector> lifts;
    std::vector<Rat> norms;
    for (int w = 0; w < g.order(); ++w) {
      lifts.push_back(m.pin->lift(w));
      norms.push_back(m.pin->lift_norm(w));
    }
    std::vector<signed char> c1, c2;
    const double cs = seconds([&] { c1 = fill_cocycle(m.pin->clifford(), g, lifts, norms, Exec::Serial); });
    const double cp = seconds([&] { c2 = fill_cocycle(m.pin->clifford(), g, lifts, norms, Exec::Parallel); });
    row("cocycle fill", name.c_str(), cs, cp, c1 == c2);
    ok = ok && c1 == c2;
  }
  return ok ? 0 : 1;
}
