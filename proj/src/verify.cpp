#include "ellchar/verify.hpp"

#include <filesystem>
#include <set>
#include <sstream>

namespace ellchar {

namespace {

std::string str(const CycNum& x) { return x.pretty(); }

bool is_integer(const CycNum& x) {
  auto r = is_rational(x);
  return r && r->get_den() == 1;
}

}  // namespace

std::string TypeSpec::name() const { return std::string(1, cartan_letter(type)) + std::to_string(rank); }

std::vector<TypeSpec> supported_types() {
  using C = CartanType;
  return {{C::A, 1}, {C::A, 2}, {C::A, 3}, {C::A, 4}, {C::A, 5}, {C::B, 2}, {C::B, 3}, {C::B, 4},
          {C::C, 3}, {C::C, 4}, {C::D, 4}, {C::G, 2}, {C::F, 4}};
}

void Check::fail(const std::string& why) {
  if (pass) detail.clear();
  pass = false;
  if (!detail.empty()) detail += "; ";
  detail += why;
}

Check check_wedge(const WeylGroup& w) {
  Check c;
  const ClassFunction wedge = wedge_pm_character(w);
  const ClassFunction det = det_one_minus_character(w);
  for (int k = 0; k < w.group().num_classes(); ++k)
    if (wedge[k] != det[k]) c.fail("class " + std::to_string(k) + ": " + str(wedge[k]) + " vs " + str(det[k]));
  if (c.pass) c.detail = std::to_string(w.group().num_classes()) + " classes";
  return c;
}

Check check_spin_square(const PinCover& pin) {
  Check c;
  const WeylGroup& w = pin.weyl();
  const FinGroup& h = pin.prime();
  const ClassFunction& d = pin.spin_diff();
  int elliptic = 0;
  for (int k = 0; k < h.num_classes(); ++k) {
    const int x = PinCover::project(pin.prime_to_wtilde(h.class_rep(k)));
    const Rat det = w.det_one_minus(x);
    const CycNum want(det * 2 / w.prime_index());
    const CycNum got = d[k] * d[k].conj();
    if (got != want) c.fail("class " + std::to_string(k) + ": |diff|^2 = " + str(got) + ", expected " + str(want));
    if (sgn(det) == 0 && !d[k].is_zero()) c.fail("class " + std::to_string(k) + ": nonzero off the elliptic set");
    elliptic += sgn(det) != 0;
  }
  if (c.pass)
    c.detail = std::to_string(h.num_classes()) + " classes of W~', " + std::to_string(elliptic) + " over elliptic";
  return c;
}

Check check_isometry(const PinCover& pin) {
  Check c;
  const WeylGroup& w = pin.weyl();
  const CharTable& t = w.table();
  const auto gram = elliptic_gram(w);
  std::vector<ClassFunction> idx;
  for (const auto& row : t.rows) idx.push_back(index_map(pin, row));
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) {
      const CycNum lhs = inner_product(idx[i], idx[j]);
      const CycNum rhs(2 * gram[i][j]);
      if (lhs != rhs)
        c.fail("(" + std::to_string(i) + "," + std::to_string(j) + "): " + str(lhs) + " vs " + str(rhs));
    }
  if (c.pass) c.detail = std::to_string(t.size()) + "x" + std::to_string(t.size()) + " Gram matrices agree";
  return c;
}

Check check_elliptic_rank(const WeylGroup& w) {
  Check c;
  const int r = elliptic_rank(w);
  const int n = static_cast<int>(elliptic_classes(w).classes.size());
  if (r != n) c.fail("rank " + std::to_string(r) + " vs " + std::to_string(n) + " elliptic classes");
  else c.detail = "rank " + std::to_string(r);
  return c;
}

Check check_table(const CharTable& t, bool integral) {
  Check c;
  const FinGroup& g = *t.group;
  if (t.size() != g.num_classes()) c.fail("table is not square");
  Rat sum = 0;
  for (int i = 0; i < t.size(); ++i) {
    auto d = is_rational(t.rows[i].degree());
    if (!d || d->get_den() != 1 || sgn(*d) <= 0) c.fail("row " + std::to_string(i) + " has a bad degree");
    else sum += *d * *d;
    for (int j = i; j < t.size(); ++j) {
      const CycNum ip = inner_product(t.rows[i], t.rows[j]);
      if (ip != CycNum(i == j ? 1 : 0)) c.fail("rows " + std::to_string(i) + "," + std::to_string(j));
    }
    if (integral)
      for (const auto& v : t.rows[i].values())
        if (!is_integer(v)) c.fail("row " + std::to_string(i) + " has a non-integral value");
  }
  for (int a = 0; a < g.num_classes(); ++a)
    for (int b = a; b < g.num_classes(); ++b) {
      CycNum s;
      for (int i = 0; i < t.size(); ++i) s += t.rows[i][a] * t.rows[i][b].conj();
      const CycNum want(a == b ? Rat(g.order()) / g.class_size(a) : Rat(0));
      if (s != want) c.fail("columns " + std::to_string(a) + "," + std::to_string(b));
    }
  if (sum != g.order()) c.fail("sum of squared degrees " + rat_string(sum));
  if (c.pass) c.detail = "|G| = " + std::to_string(g.order()) + ", " + std::to_string(t.size()) + " irreducibles";
  return c;
}

Check check_tables(const PinCover& pin) {
  Check c;
  const Check w = check_table(pin.weyl().table(), true);
  const Check wt = check_table(pin.wtilde_table(), false);
  if (!w.pass) c.fail("W: " + w.detail);
  if (!wt.pass) c.fail("W~: " + wt.detail);
  if (c.pass) c.detail = "W " + w.detail + "; W~ " + wt.detail;
  return c;
}

Check check_casimir_central(const PinCover& pin, const CasimirElem& omega) {
  Check c;
  if (!casimir_is_central(pin, omega)) c.fail("Casimir element is not central");
  for (int r : pin.genuine_rows()) {
    const CycNum a = casimir_scalar(pin, omega, pin.prime_table().rows[r]);
    if (a != a.conj()) c.fail("row " + std::to_string(r) + " has a non-real Casimir scalar");
  }
  return c;
}

BnCheck check_bn_example(int n) {
  BnCheck out;
  auto m = Model::build(CartanType::B, n);
  const RootSystem& rs = m.weyl->roots();
  const CasimirElem om = build_casimir(*m.pin, ParamFn::by_length(rs, Rat(1), Rat(1) / 3));
  const CasimirElem om2 = build_casimir(*m.pin, ParamFn::by_length(rs, Rat(1), Rat(7) / 3));
  try {
    out.rows = bn_example_report(*m.pin, om);
  } catch (const SelectionError& e) {
    out.example.fail(e.what());
    out.index_norm.fail("no selection");
    return out;
  }
  std::vector<BnExampleRow> other;
  try {
    other = bn_example_report(*m.pin, om2);
  } catch (const SelectionError& e) {
    out.example.fail(std::string("second parameter: ") + e.what());
  }
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const auto& row = out.rows[i];
    const std::string s = partition_string(row.sigma);
    if (row.sign == 0) out.example.fail(s + ": ratio to MN is not a constant sign");
    if (row.pair.mult_plus != CycNum(1) || row.pair.mult_minus != CycNum(1))
      out.example.fail(s + ": multiplicity " + str(row.pair.mult_plus) + "/" + str(row.pair.mult_minus));
    if (i < other.size() && other[i].values != row.values) out.example.fail(s + ": values depend on m");
    if (row.index_norm != CycNum(2)) out.index_norm.fail(s + ": norm " + str(row.index_norm));
  }
  if (out.example.pass) out.example.detail = std::to_string(out.rows.size()) + " partitions";
  if (out.index_norm.pass) out.index_norm.detail = std::to_string(out.rows.size()) + " pairs";
  return out;
}

Check check_a1_calibration() {
  Check c;
  const KappaCalibration& cal = calibrate_kappa();
  auto m = Model::build(CartanType::A, 1);
  const RootSystem& rs = m.weyl->roots();
  const RatVec& cv = rs.coroots[rs.simple[0]];
  const CycNum want(rs.inner(cv, cv) / 4);
  const CasimirElem om = build_casimir(*m.pin, ParamFn::equal(rs));
  const auto rows = m.pin->genuine_rows();
  if (rows.size() != 2) c.fail(std::to_string(rows.size()) + " genuine characters");
  for (int r : rows) {
    const CycNum a = casimir_scalar(*m.pin, om, m.pin->prime_table().rows[r]);
    if (a != want) c.fail("a = " + str(a) + ", expected " + str(want));
  }
  if (calibrate_kappa().kappa != cal.kappa) c.fail("calibration is not stable");
  if (c.pass) c.detail = cal.log;
  return c;
}

Check check_scale_covariance(CartanType type, int rank, const Rat& scale) {
  Check c;
  auto base = Model::build(type, rank);
  auto scaled = Model::build(type, rank, scale);
  const Rat factor = 1 / scale;
  const CharTable& t0 = base.pin->prime_table();
  const CharTable& t1 = scaled.pin->prime_table();
  if (t0.size() != t1.size()) {
    c.fail("W~' tables differ in size");
    return c;
  }
  for (int r = 0; r < t0.size(); ++r)
    if (t0.rows[r].values() != t1.rows[r].values()) c.fail("W~' tables differ");
  if (!c.pass) return c;

  const CasimirElem om0 = build_casimir(*base.pin, ParamFn::equal(base.weyl->roots()));
  const CasimirElem om1 = build_casimir(*scaled.pin, ParamFn::equal(scaled.weyl->roots()));
  for (int r : base.pin->genuine_rows()) {
    const CycNum a0 = casimir_scalar(*base.pin, om0, t0.rows[r]);
    const CycNum a1 = casimir_scalar(*scaled.pin, om1, t1.rows[r]);
    if (a1 != a0 * factor) c.fail("row " + std::to_string(r) + ": a " + str(a0) + " -> " + str(a1));
  }

  const SpringerEntry e0 = regular_entry(*base.weyl, ParamFn::equal(base.weyl->roots()));
  const SpringerEntry e1 = regular_entry(*scaled.weyl, ParamFn::equal(scaled.weyl->roots()));
  if (*e1.h_value != *e0.h_value * factor)
    c.fail("h " + rat_string(*e0.h_value) + " -> " + rat_string(*e1.h_value));

  const auto ell = elliptic_classes(*base.weyl);
  int compared = 0;
  for (int s = 0; s < base.weyl->table().size(); ++s) {
    if (base.weyl->table().rows[s].values() != scaled.weyl->table().rows[s].values()) {
      c.fail("W tables differ");
      break;
    }
    std::optional<SigmaPair> p0, p1;
    try {
      p0 = select_sigma_pair(*base.pin, om0, base.weyl->table().rows[s]);
    } catch (const SelectionError&) {
    }
    try {
      p1 = select_sigma_pair(*scaled.pin, om1, scaled.weyl->table().rows[s]);
    } catch (const SelectionError&) {
    }
    if (p0.has_value() != p1.has_value()) {
      c.fail("selection succeeds at one scale only");
      continue;
    }
    if (!p0) continue;
    if (p0->plus != p1->plus || p0->minus != p1->minus) c.fail("different pairs selected");
    if (p1->a != p0->a * factor) c.fail("selected a does not scale");
    for (int k : ell.classes) {
      const int x = base.weyl->group().class_rep(k);
      if (elliptic_character(*base.pin, *p0, x) != elliptic_character(*scaled.pin, *p1, x))
        c.fail("elliptic character changes at class " + std::to_string(k));
      ++compared;
    }
  }
  if (c.pass)
    c.detail = "form x" + rat_string(scale) + ": a, h x" + rat_string(factor) + "; " + std::to_string(compared) +
               " elliptic values equal";
  return c;
}

ParamFn params_of(const RootSystem& rs, const ParameterSet& ps) {
  if (ps.c_long == ps.c_short) return ParamFn::equal(rs, ps.c_long);
  return ParamFn::by_length(rs, ps.c_long, ps.c_short);
}

std::vector<SpringerEvalRow> springer_eval(const Model& m, const SpringerFile& f, const ParamFn& c) {
  const RootSystem& rs = m.weyl->roots();
  const std::vector<int> rows = validate_springer(f, *m.weyl);
  const CasimirElem om = build_casimir(*m.pin, c);
  const auto ell = elliptic_classes(*m.weyl);
  std::vector<SpringerEvalRow> out;
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    SpringerEvalRow r;
    r.entry = &f.entries[i];
    r.sigma_row = rows[i];
    r.h = entry_h(f.entries[i], rs);
    if (c.is_constant()) r.target = c(0) * c(0) * r.h / 4;
    try {
      r.pair = select_sigma_pair(*m.pin, om, m.weyl->table().rows[r.sigma_row], r.target);
      for (int k : ell.classes) {
        r.classes.push_back(k);
        r.values.push_back(elliptic_character(*m.pin, *r.pair, m.weyl->group().class_rep(k)));
      }
    } catch (const SelectionError& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Check check_springer_file(const std::string& path) {
  Check c;
  const SpringerFile f = load_springer_file(path);
  auto m = Model::build(parse_cartan(f.type), f.rank);
  validate_springer(f, *m.weyl);

  for (const auto& v : empirical_h_monotonicity(f, m.weyl->roots()))
    c.fail("h(" + v.upper + ") = " + rat_string(v.h_upper) + " <= h(" + v.lower + ") = " + rat_string(v.h_lower));
  if (f.parameter_sets.empty()) c.fail("file lists no parameter sets");

  std::vector<std::vector<SpringerEvalRow>> runs;
  for (const auto& ps : f.parameter_sets) {
    runs.push_back(springer_eval(m, f, params_of(m.weyl->roots(), ps)));
    for (const auto& r : runs.back()) {
      if (!r.entry->quasidistinguished) continue;
      const std::string where = ps.name + "/" + r.entry->nilpotent;
      if (!r.pair) {
        c.fail(where + ": " + r.error);
        continue;
      }
      if (r.pair->mult_plus != CycNum(1) || r.pair->mult_minus != CycNum(1))
        c.fail(where + ": multiplicity " + str(r.pair->mult_plus) + "/" + str(r.pair->mult_minus));
      if (!r.pair->minimal) c.fail(where + ": selected scalar is not the least");
    }
  }
  for (std::size_t k = 1; k < runs.size(); ++k)
    for (std::size_t i = 0; i < runs[k].size(); ++i) {
      const auto& a = runs[0][i];
      const auto& b = runs[k][i];
      if (!a.entry->quasidistinguished || !a.pair || !b.pair) continue;
      if (a.pair->plus != b.pair->plus || a.pair->minus != b.pair->minus)
        c.fail(a.entry->nilpotent + ": selected pair differs between " + f.parameter_sets[0].name + " and " +
               f.parameter_sets[k].name);
      else if (a.values != b.values)
        c.fail(a.entry->nilpotent + ": elliptic character differs across parameter sets");
    }
  if (c.pass)
    c.detail = f.type + std::to_string(f.rank) + ": " + std::to_string(f.entries.size()) + " entries x " +
               std::to_string(f.parameter_sets.size()) + " parameter sets";
  return c;
}

std::vector<Check> verify_type(const Model& m) {
  return {check_wedge(*m.weyl), check_spin_square(*m.pin), check_isometry(*m.pin), check_elliptic_rank(*m.weyl),
          check_tables(*m.pin)};
}

}  // namespace ellchar
