// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <functional>
#include <iomanip>
#include <map>

#include "ellchar/verify.hpp"

using namespace ellchar;

namespace {

struct Line {
  bool pass = true;
  bool skipped = false;
  std::vector<std::string> notes;
  double seconds = 0;

  void add(const std::string& who, const Check& c) {
    if (!c.pass) {
      pass = false;
      notes.push_back(who + ": " + c.detail);
    }
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::map<int, std::string> names{{1, "wedge identity chi(w) = det(1-w)"},
                                         {2, "spin difference square"},
                                         {3, "index isometry 2 e_W = (i, i)"},
                                         {4, "elliptic rank"},
                                         {5, "character table validity (W and W~)"},
                                         {6, "B_n family against Murnaghan-Nakayama"},
                                         {7, "index norm 2"},
                                         {8, "A1 Casimir calibration"},
                                         {9, "scale covariance (A2, B2)"},
                                         {10, "Springer data (G2, F4)"}};
  std::map<int, Line> lines;
  std::cerr << calibrate_kappa().log << "\n";

  for (const auto& t : supported_types()) {
    auto t0 = std::chrono::steady_clock::now();
    auto m = Model::build(t.type, t.rank);
    const double build = since(t0);
    const std::function<Check()> checks[] = {
        [&] { return check_wedge(*m.weyl); },       [&] { return check_spin_square(*m.pin); },
        [&] { return check_isometry(*m.pin); },     [&] { return check_elliptic_rank(*m.weyl); },
        [&] { return check_tables(*m.pin); }};
    for (int i = 0; i < 5; ++i) {
      t0 = std::chrono::steady_clock::now();
      lines[i + 1].add(t.name(), checks[i]());
      lines[i + 1].seconds += since(t0);
    }
    lines[1].seconds += build;
    std::cerr << t.name() << " done\n";
  }

  for (int n = 1; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const BnCheck b = check_bn_example(n);
    lines[6].add("B" + std::to_string(n), b.example);
    lines[7].add("B" + std::to_string(n), b.index_norm);
    lines[6].seconds += since(t0);
  }

  auto t0 = std::chrono::steady_clock::now();
  lines[8].add("A1", check_a1_calibration());
  lines[8].seconds = since(t0);

  t0 = std::chrono::steady_clock::now();
  lines[9].add("A2", check_scale_covariance(CartanType::A, 2, Rat(1, 2)));
  lines[9].add("B2", check_scale_covariance(CartanType::B, 2, Rat(1, 2)));
  lines[9].seconds = since(t0);

  t0 = std::chrono::steady_clock::now();
  int files = 0;
  for (const char* f : {"springer_G2.json", "springer_F4.json"}) {
    const std::string path = std::string(ELLCHAR_DATA_DIR) + "/" + f;
    if (!std::filesystem::exists(path)) continue;
    ++files;
    try {
      lines[10].add(f, check_springer_file(path));
    } catch (const std::exception& e) {
      Check c;
      c.fail(e.what());
      lines[10].add(f, c);
    }
  }
  lines[10].skipped = files == 0;
  lines[10].seconds = since(t0);

  bool ok = true;
  for (const auto& [id, line] : lines) {
    const char* tag = line.skipped ? "SKIP" : line.pass ? "PASS" : "FAIL";
    std::cout << "[" << tag << "] criterion " << id << ": " << names.at(id) << " (" << std::fixed
              << std::setprecision(1) << line.seconds << "s)";
    for (const auto& n : line.notes) std::cout << "\n    " << n;
    std::cout << "\n";
    ok = ok && line.pass;
  }
  return ok ? 0 : 1;
}
