#pragma once

// A Weyl group together with its Pin double cover, built under the calibrated
// Clifford sign convention.

#include <memory>
#include <string>

#include "ellchar/dirac.hpp"

namespace ellchar {

struct KappaCalibration {
  int kappa = 0;
  CycNum a_positive;  // genuine A1 scalar under kappa
  CycNum a_negative;  // the same under -kappa
  std::string log;
};

/// Picks kappa in {+1, -1} such that both genuine characters of the A1 cover
/// have the positive Casimir scalar <alpha^vee, alpha^vee>/4. Computed once.
const KappaCalibration& calibrate_kappa();

struct Model {
  std::unique_ptr<WeylGroup> weyl;
  std::unique_ptr<PinCover> pin;

  /// kappa = 0 uses the calibrated value.
  static Model build(CartanType type, int rank, const Rat& form_scale = Rat(1), bool parallel = true,
                     int kappa = 0);
};

}  // namespace ellchar
