#include "ellchar/model.hpp"

#include <mutex>

namespace ellchar {

namespace {

// Common genuine scalar on A1 under the given kappa.
CycNum a1_scalar(int kappa) {
  auto w = WeylGroup::build(CartanType::A, 1);
  PinOptions opt;
  opt.kappa = kappa;
  auto pin = PinCover::build(*w, opt);
  const CasimirElem om = build_casimir(*pin, ParamFn::equal(w->roots()));
  std::optional<CycNum> a;
  for (int r : pin->genuine_rows()) {
    CycNum v = casimir_scalar(*pin, om, pin->prime_table().rows[r]);
    if (a && *a != v) throw std::logic_error("A1 genuine characters have different Casimir scalars");
    a = v;
  }
  if (!a) throw std::logic_error("A1 cover has no genuine character");
  return *a;
}

}  // namespace

const KappaCalibration& calibrate_kappa() {
  static KappaCalibration cal;
  static std::once_flag once;
  std::call_once(once, [] {
    auto w = WeylGroup::build(CartanType::A, 1);
    const RootSystem& rs = w->roots();
    const RatVec& cv = rs.coroots[rs.simple[0]];
    const CycNum want(rs.inner(cv, cv) / 4);
    const CycNum plus = a1_scalar(1), minus = a1_scalar(-1);
    if (plus == want)
      cal = {1, plus, minus, ""};
    else if (minus == want)
      cal = {-1, minus, plus, ""};
    else
      throw std::logic_error("neither Clifford sign gives the A1 Casimir scalar " + want.pretty());
    cal.log = "kappa = " + std::to_string(cal.kappa) + ": A1 genuine scalar " + cal.a_positive.pretty() +
              " (other sign gives " + cal.a_negative.pretty() + ")";
  });
  return cal;
}

Model Model::build(CartanType type, int rank, const Rat& form_scale, bool parallel, int kappa) {
  Model m;
  m.weyl = WeylGroup::build(type, rank, form_scale, parallel);
  PinOptions opt;
  opt.kappa = kappa == 0 ? calibrate_kappa().kappa : kappa;
  opt.parallel = parallel;
  m.pin = PinCover::build(*m.weyl, opt);
  return m;
}

}  // namespace ellchar
