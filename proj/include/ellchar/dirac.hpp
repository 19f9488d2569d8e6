#pragma once

// The Casimir element of the double cover, its scalars on genuine
// representations, the Dirac index map and the elliptic character formula.

#include <optional>
#include <string>
#include <vector>

#include "ellchar/pin.hpp"

namespace ellchar {

/// Which ordered pairs of positive roots enter the Casimir sum.
enum class CasimirConvention {
  ReflectedNegative,  // s_alpha(beta) < 0
  ReflectedPositive,  // s_alpha(beta) > 0
};

struct CasimirElem {
  ParamFn params;
  CasimirConvention convention = CasimirConvention::ReflectedNegative;
  std::vector<CycNum> coeff;  // indexed by W~ elements
  Multivector clifford;       // the same element inside C(V0)
};

/// sum over ordered positive pairs of c_a c_b / (|a|^2 |b|^2) * a b, with
/// each product a b rewritten as +-|a||b| times a lift of s_a s_b.
CasimirElem build_casimir(const PinCover& pin, const ParamFn& c,
                          CasimirConvention conv = CasimirConvention::ReflectedNegative);

/// Exact commutation with z and every lifted simple reflection.
bool casimir_is_central(const PinCover& pin, const CasimirElem& omega);

/// Sum of the coefficients over each W~' class.
std::vector<CycNum> casimir_class_sums(const PinCover& pin, const CasimirElem& omega);

/// a(row) = sum_g Omega(g) chi(g) / chi(1) for a character of W~'.
CycNum casimir_scalar(const PinCover& pin, const CasimirElem& omega, const ClassFunction& chi);

/// i(sigma) = res_{W'}(sigma) (S+ - S-) as a class function of W~'.
ClassFunction index_map(const PinCover& pin, const ClassFunction& sigma);

struct SelectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SigmaPair {
  int plus = -1;   // row of the W~' table
  int minus = -1;
  CycNum a;        // common Casimir scalar
  bool odd = true;
  CycNum mult_plus, mult_minus;
  bool minimal = false;  // a is the least scalar over the support
  std::vector<int> support_plus;  // genuine rows in sigma (x) S+
  std::vector<CycNum> support_a;
};

/// The constituent of res(sigma) (x) S+ whose Casimir scalar equals the target
/// (or is least when no target is given), and its partner in res(sigma) (x) S-.
SigmaPair select_sigma_pair(const PinCover& pin, const CasimirElem& omega, const ClassFunction& sigma,
                            const std::optional<Rat>& target = std::nullopt);

/// (chi_{s+} - chi_{s-}) / (chi_{S+} - chi_{S-}) at the lift of sign `s` of the
/// elliptic element w.
CycNum elliptic_character(const PinCover& pin, const SigmaPair& pair, int w, int s = 1);

/// Real-part ordering used for "as small as possible".
double shadow_real(const CycNum& x);

struct BnExampleRow {
  Partition sigma;
  SigmaPair pair;
  std::vector<Partition> lambdas;
  std::vector<CycNum> values;  // elliptic character at w_lambda
  std::vector<long> mn;        // chi_sigma(lambda)
  int sign = 0;                // +1 / -1, or 0 when the ratio is not constant
  CycNum index_norm;
};

std::vector<BnExampleRow> bn_example_report(const PinCover& pin, const CasimirElem& omega);

}  // namespace ellchar
