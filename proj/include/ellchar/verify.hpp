#pragma once

// Exact checks behind the acceptance suite, and evaluation of Springer data.

#include <optional>
#include <string>
#include <vector>

#include "ellchar/model.hpp"
#include "ellchar/springerdb.hpp"

namespace ellchar {

struct TypeSpec {
  CartanType type;
  int rank;
  std::string name() const;
};

/// A1-A5, B2-B4, C3-C4, D4, G2, F4.
std::vector<TypeSpec> supported_types();

struct Check {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why);
};

Check check_wedge(const WeylGroup& w);
Check check_spin_square(const PinCover& pin);
Check check_isometry(const PinCover& pin);
Check check_elliptic_rank(const WeylGroup& w);
Check check_table(const CharTable& t, bool integral);
Check check_tables(const PinCover& pin);
Check check_casimir_central(const PinCover& pin, const CasimirElem& omega);

/// Type B_n with c_long = 1, c_short = 1/3: criteria on the sigma x (empty) family.
struct BnCheck {
  Check example;     // selection, multiplicity one, constant sign against MN
  Check index_norm;  // (s+ - s-, s+ - s-) = 2
  std::vector<BnExampleRow> rows;
};
BnCheck check_bn_example(int n);

Check check_a1_calibration();

/// Runs the pipeline at form scales 1 and `scale`; a and h must scale by
/// 1/scale and the elliptic characters must agree.
Check check_scale_covariance(CartanType type, int rank, const Rat& scale);

struct SpringerEvalRow {
  const SpringerEntry* entry = nullptr;
  int sigma_row = -1;
  Rat h;
  std::optional<Rat> target;
  std::optional<SigmaPair> pair;
  std::string error;
  std::vector<int> classes;      // elliptic W classes
  std::vector<CycNum> values;    // elliptic character on them
};

/// Equal parameters c select by a = c^2 h / 4; other parameters by minimal a.
std::vector<SpringerEvalRow> springer_eval(const Model& m, const SpringerFile& f, const ParamFn& c);

ParamFn params_of(const RootSystem& rs, const ParameterSet& ps);

/// Data-conditional check on one file: selection with multiplicity one under
/// every parameter set, monotonicity of h, and agreement of the selected pairs
/// across parameter sets.
Check check_springer_file(const std::string& path);

/// Criteria 1-5 for one type, in order.
std::vector<Check> verify_type(const Model& m);

}  // namespace ellchar
