#include "ellchar/serialize.hpp"

namespace ellchar {

namespace {

Json big(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

}  // namespace

Json to_json(const Rat& r) { return rat_string(r); }

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const Rat& c : x.coeffs()) coeffs.push_back(Json::array({big(c.get_num()), big(c.get_den())}));
  const std::complex<double> s = x.shadow();
  return Json{{"N", x.conductor()}, {"coeffs", coeffs}, {"shadow", Json::array({s.real(), s.imag()})}};
}

Json to_json(const ClassFunction& f) {
  Json out = Json::array();
  for (const auto& v : f.values()) out.push_back(to_json(v));
  return out;
}

CycNum cycnum_from_json(const Json& j) {
  const unsigned n = j.at("N").get<unsigned>();
  std::vector<Rat> c;
  for (const auto& p : j.at("coeffs")) {
    Rat r(big_from(p.at(0)));
    r /= Rat(big_from(p.at(1)));
    c.push_back(r);
  }
  return CycNum::from_powers(n, std::move(c));
}

}  // namespace ellchar
