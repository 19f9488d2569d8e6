#pragma once

// Springer data files: top-degree Springer characters as table fingerprints,
// the neutral element s of an sl2-triple, h = <s, s>, closure data, and the
// parameter sets a file is meant to be evaluated with.

#include <optional>
#include <string>
#include <vector>

#include "ellchar/weyl.hpp"

namespace ellchar {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Fingerprint {
  long degree = 0;
  std::vector<long> values;  // class order of the W table
  bool operator==(const Fingerprint&) const = default;
};

struct SpringerEntry {
  std::string nilpotent;
  std::string phi = "triv";
  Fingerprint sigma_top;
  std::optional<RatVec> s_vector;  // ambient coordinates
  std::optional<Rat> h_value;
  bool quasidistinguished = false;
  std::vector<std::string> closure_above;
};

struct ParameterSet {
  std::string name;
  Rat c_long{1};
  Rat c_short{1};
};

struct SpringerFile {
  std::string type;
  int rank = 0;
  std::vector<ParameterSet> parameter_sets;
  std::vector<SpringerEntry> entries;
};

/// Parse and validate against the schema only.
SpringerFile parse_springer(const std::string& text);
std::string dump_springer(const SpringerFile& f);
SpringerFile load_springer_file(const std::string& path);

/// Full validation against W: each fingerprint names exactly one row and
/// h = <s, s> whenever both are given. Returns the resolved rows.
std::vector<int> validate_springer(const SpringerFile& f, const WeylGroup& w);

Fingerprint fingerprint_of(const ClassFunction& chi);
int resolve_fingerprint(const Fingerprint& fp, const CharTable& t);
Rat entry_h(const SpringerEntry& e, const RootSystem& rs);

/// Regular nilpotent: alpha_i(s) = 2 c(alpha_i), sigma_top = sgn.
SpringerEntry regular_entry(const WeylGroup& w, const ParamFn& c);

/// Element s with alpha_i(s) = weight_i, solved in the span of the simple roots.
RatVec solve_neutral(const RootSystem& rs, const std::vector<Rat>& weights);

/// Distinguished nilpotent orbits from distinguished parabolic subsets J
/// (weights 0 on J and 2 elsewhere), with sigma_top = j-induction of sgn_J
/// tensored with sgn. Orbits are labelled by `labels` in decreasing dimension
/// when given, otherwise by their weighted Dynkin diagram.
std::vector<SpringerEntry> derive_distinguished(const WeylGroup& w, const std::vector<std::string>& labels = {});

/// b-value of every irreducible character: least degree in S(V).
std::vector<int> b_values(const WeylGroup& w);

struct Violation {
  std::string lower, upper;
  Rat h_lower, h_upper;
};
std::vector<Violation> empirical_h_monotonicity(const SpringerFile& f, const RootSystem& rs);

}  // namespace ellchar
