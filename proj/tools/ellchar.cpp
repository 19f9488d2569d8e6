// Command-line front end. JSON on stdout; exit 0 on success, 1 when a check
// or selection fails, 2 on a usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "ellchar/serialize.hpp"
#include "ellchar/verify.hpp"

using namespace ellchar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type = "A";
  int rank = 1;
  std::string params = "equal";
  std::string convention = "negative";
  std::string group = "W";
  std::string format = "json";
  std::string data;
  std::string out;
  std::vector<std::string> labels;
  std::vector<std::string> param_sets;
  int n = 1;
  bool elliptic = false;
  bool serial = false;
};

Json header(const std::string& command, const Config& c) {
  Json h{{"command", command}, {"type", c.type}, {"rank", c.rank}};
  if (command == "casimir" || command == "springer-eval") h["params"] = c.params;
  if (command == "casimir") h["convention"] = c.convention;
  if (command == "chartable") h["group"] = c.group;
  h["kappa"] = calibrate_kappa().kappa;
  h["threads"] = kernel_threads();
  return h;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Model model_of(const Config& c) {
  try {
    return Model::build(parse_cartan(c.type), c.rank, Rat(1), !c.serial);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rat parse_rat_arg(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) throw UsageError("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

ParamFn parse_params(const RootSystem& rs, const std::string& arg) {
  if (arg == "equal") return ParamFn::equal(rs);
  if (arg.rfind("equal:", 0) == 0) return ParamFn::equal(rs, parse_rat_arg(arg.substr(6)));
  if (arg.rfind("geometric:", 0) == 0) {
    const std::string rest = arg.substr(10);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw UsageError("expected geometric:c_long,c_short");
    try {
      return ParamFn::by_length(rs, parse_rat_arg(rest.substr(0, comma)), parse_rat_arg(rest.substr(comma + 1)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown parameter specification '" + arg + "'");
}

Json pair_json(const PinCover& pin, const SigmaPair& p) {
  Json j{{"plus_row", p.plus},
         {"minus_row", p.minus},
         {"a", to_json(p.a)},
         {"mult_plus", to_json(p.mult_plus)},
         {"mult_minus", to_json(p.mult_minus)},
         {"minimal", p.minimal}};
  j["plus_character"] = to_json(pin.prime_table().rows[p.plus]);
  j["minus_character"] = to_json(pin.prime_table().rows[p.minus]);
  return j;
}

int cmd_info(const Config& c) {
  auto m = model_of(c);
  const RootSystem& rs = m.weyl->roots();
  std::map<Rat, int> lengths;
  for (int a = 0; a < static_cast<int>(rs.roots.size()); ++a) ++lengths[rs.norm2(a)];
  Json lj = Json::array();
  for (const auto& [len, count] : lengths) lj.push_back({{"norm2", to_json(len)}, {"count", count}});
  Json j = header("info", c);
  j["name"] = rs.name();
  j["num_roots"] = rs.roots.size();
  j["num_positive"] = rs.num_positive();
  j["lengths"] = lj;
  j["coxeter_number"] = rs.coxeter_number();
  j["invariant_degrees"] = invariant_degrees(rs.type, rs.rank);
  j["order"] = m.weyl->group().order();
  j["num_classes"] = m.weyl->group().num_classes();
  j["wtilde_order"] = m.pin->wtilde().order();
  j["wtilde_prime_order"] = m.pin->prime().order();
  j["kappa_log"] = calibrate_kappa().log;
  emit(j);
  return 0;
}

int cmd_classes(const Config& c) {
  auto m = model_of(c);
  const FinGroup& g = m.weyl->group();
  const auto ell = elliptic_classes(*m.weyl);
  Json rows = Json::array();
  for (int k = 0; k < g.num_classes(); ++k) {
    const Rat det = m.weyl->det_one_minus(g.class_rep(k));
    if (c.elliptic && sgn(det) == 0) continue;
    Json r{{"class_index", k}, {"size", g.class_size(k)}, {"order", g.element_order(g.class_rep(k))},
           {"det1mw", to_json(CycNum(det))}, {"word", g.word(g.class_rep(k))}};
    for (std::size_t i = 0; i < ell.classes.size(); ++i)
      if (ell.classes[i] == k && !ell.labels.empty() && !ell.labels[i].empty())
        r["partition_label"] = partition_string(ell.labels[i]);
    rows.push_back(r);
  }
  Json j = header("classes", c);
  j["elliptic_only"] = c.elliptic;
  j["classes"] = rows;
  emit(j);
  return 0;
}

int cmd_chartable(const Config& c) {
  auto m = model_of(c);
  const CharTable* t = nullptr;
  if (c.group == "W")
    t = &m.weyl->table();
  else if (c.group == "Wtilde")
    t = &m.pin->wtilde_table();
  else if (c.group == "Wtilde'")
    t = &m.pin->prime_table();
  else
    throw UsageError("--group must be W, Wtilde or Wtilde'");
  const FinGroup& g = *t->group;

  if (c.format == "csv") {
    std::cout << "row";
    for (int k = 0; k < g.num_classes(); ++k) std::cout << ",c" << k;
    std::cout << "\n";
    for (int r = 0; r < t->size(); ++r) {
      std::cout << r;
      for (const auto& v : t->rows[r].values()) std::cout << ",\"" << v.pretty() << "\"";
      std::cout << "\n";
    }
    return 0;
  }
  if (c.format == "pretty") {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 3;
    for (const auto& row : t->rows) {
      cells.emplace_back();
      for (const auto& v : row.values()) {
        cells.back().push_back(v.pretty());
        width = std::max(width, cells.back().back().size());
      }
    }
    std::cout << std::setw(5) << "";
    for (int k = 0; k < g.num_classes(); ++k) std::cout << " " << std::setw(width) << ("c" + std::to_string(k));
    std::cout << "\n" << std::setw(5) << "size";
    for (int k = 0; k < g.num_classes(); ++k) std::cout << " " << std::setw(width) << g.class_size(k);
    std::cout << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::cout << std::setw(5) << ("x" + std::to_string(r));
      for (const auto& s : cells[r]) std::cout << " " << std::setw(width) << s;
      std::cout << "\n";
    }
    return 0;
  }
  if (c.format != "json") throw UsageError("--format must be json, csv or pretty");

  Json sizes = Json::array(), orders = Json::array(), rows = Json::array(), pretty = Json::array();
  for (int k = 0; k < g.num_classes(); ++k) {
    sizes.push_back(g.class_size(k));
    orders.push_back(g.element_order(g.class_rep(k)));
  }
  for (const auto& row : t->rows) {
    rows.push_back(to_json(row));
    Json p = Json::array();
    for (const auto& v : row.values()) p.push_back(v.pretty());
    pretty.push_back(p);
  }
  Json j = header("chartable", c);
  j["order"] = g.order();
  j["class_sizes"] = sizes;
  j["element_orders"] = orders;
  j["rows"] = rows;
  j["pretty"] = pretty;
  emit(j);
  return 0;
}

int cmd_spin(const Config& c) {
  auto m = model_of(c);
  const PinCover& pin = *m.pin;
  const FinGroup& h = pin.prime();
  Json rows = Json::array();
  for (int k = 0; k < h.num_classes(); ++k) {
    const int x = pin.prime_to_wtilde(h.class_rep(k));
    const int w = PinCover::project(x);
    const Rat det = m.weyl->det_one_minus(w);
    const CycNum& d = pin.spin_diff()[k];
    rows.push_back({{"class_index", k},
                    {"over_class", m.weyl->group().class_of(w)},
                    {"lift_sign", PinCover::sign(x)},
                    {"elliptic", sgn(det) != 0},
                    {"diff_value", to_json(d)},
                    {"diff_value_squared", to_json(d * d)},
                    {"diff_abs_squared", to_json(d * d.conj())},
                    {"det1mw", to_json(CycNum(det))},
                    {"plus_value", to_json(pin.spin_plus()[k])},
                    {"minus_value", to_json(pin.spin_minus()[k])}});
  }
  Json j = header("spin", c);
  j["orientation"] = pin.orientation();
  j["classes"] = rows;
  emit(j);
  return 0;
}

int cmd_pairing(const Config& c) {
  auto m = model_of(c);
  const auto gram = elliptic_gram(*m.weyl);
  Json g = Json::array();
  for (const auto& row : gram) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(CycNum(v)));
    g.push_back(r);
  }
  Json j = header("elliptic-pairing", c);
  j["gram"] = g;
  j["rank"] = elliptic_rank(*m.weyl);
  j["num_elliptic_classes"] = elliptic_classes(*m.weyl).classes.size();
  emit(j);
  return 0;
}

int cmd_casimir(const Config& c) {
  auto m = model_of(c);
  const ParamFn p = parse_params(m.weyl->roots(), c.params);
  CasimirConvention conv;
  if (c.convention == "negative")
    conv = CasimirConvention::ReflectedNegative;
  else if (c.convention == "positive")
    conv = CasimirConvention::ReflectedPositive;
  else
    throw UsageError("--convention must be negative or positive");
  const CasimirElem om = build_casimir(*m.pin, p, conv);
  const CasimirElem other = build_casimir(
      *m.pin, p,
      conv == CasimirConvention::ReflectedNegative ? CasimirConvention::ReflectedPositive
                                                   : CasimirConvention::ReflectedNegative);
  const CharTable& t = m.pin->prime_table();
  Json rows = Json::array();
  for (int r : m.pin->genuine_rows()) {
    const CycNum a = casimir_scalar(*m.pin, om, t.rows[r]);
    const CycNum b = casimir_scalar(*m.pin, other, t.rows[r]);
    rows.push_back({{"row", r},
                    {"degree", to_json(t.rows[r].degree())},
                    {"a", to_json(a)},
                    {"a_rational", is_rational(a).has_value()},
                    {"a_other_convention", to_json(b)}});
  }
  Json j = header("casimir", c);
  j["central"] = casimir_is_central(*m.pin, om);
  j["genuine"] = rows;
  emit(j);
  return 0;
}

int cmd_bn_example(const Config& c) {
  if (c.n < 1 || c.n > 4) throw UsageError("--n must be between 1 and 4");
  const BnCheck chk = check_bn_example(c.n);
  Json rows = Json::array();
  for (const auto& row : chk.rows) {
    Json vals = Json::array();
    for (std::size_t i = 0; i < row.lambdas.size(); ++i)
      vals.push_back({{"lambda", partition_string(row.lambdas[i])},
                      {"value", to_json(row.values[i])},
                      {"mn", row.mn[i]}});
    rows.push_back({{"sigma", partition_string(row.sigma)},
                    {"sign", row.sign},
                    {"index_norm", to_json(row.index_norm)},
                    {"a", to_json(row.pair.a)},
                    {"mult_plus", to_json(row.pair.mult_plus)},
                    {"mult_minus", to_json(row.pair.mult_minus)},
                    {"support_size", row.pair.support_plus.size()},
                    {"values", vals}});
  }
  Config h = c;
  h.type = "B";
  h.rank = c.n;
  Json j = header("bn-example", h);
  j["params"] = "geometric:1,1/3";
  j["rows"] = rows;
  j["pass"] = chk.example.pass && chk.index_norm.pass;
  if (!chk.example.pass) j["failure"] = chk.example.detail;
  if (!chk.index_norm.pass) j["index_failure"] = chk.index_norm.detail;
  emit(j);
  return j["pass"].get<bool>() ? 0 : 1;
}

Json eval_json(const Model& m, const std::vector<SpringerEvalRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json e{{"nilpotent", r.entry->nilpotent},
           {"phi", r.entry->phi},
           {"sigma_row", r.sigma_row},
           {"h", to_json(r.h)},
           {"quasidistinguished", r.entry->quasidistinguished}};
    if (r.target) e["target_a"] = to_json(*r.target);
    if (r.pair) {
      e["pair"] = pair_json(*m.pin, *r.pair);
      Json vals = Json::array();
      for (std::size_t i = 0; i < r.classes.size(); ++i)
        vals.push_back({{"class_index", r.classes[i]}, {"value", to_json(r.values[i])}});
      e["elliptic_character"] = vals;
    } else {
      e["error"] = r.error;
    }
    out.push_back(e);
  }
  return out;
}

int cmd_springer_eval(const Config& c) {
  SpringerFile f;
  try {
    f = load_springer_file(c.data);
  } catch (const SchemaError& e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  Config cc = c;
  if (!f.entries.empty() || !f.type.empty()) {
    cc.type = f.type;
    cc.rank = f.rank;
  }
  auto m = model_of(cc);
  Json j = header("springer-eval", cc);
  j["data"] = c.data;
  bool ok = true;
  Json runs = Json::array();
  std::vector<std::pair<std::string, ParamFn>> sets;
  if (!c.params.empty() && c.params != "file")
    sets.emplace_back(c.params, parse_params(m.weyl->roots(), c.params));
  else
    for (const auto& ps : f.parameter_sets) sets.emplace_back(ps.name, params_of(m.weyl->roots(), ps));
  for (const auto& [name, p] : sets) {
    const auto rows = springer_eval(m, f, p);
    for (const auto& r : rows) ok = ok && (r.pair.has_value() || !r.entry->quasidistinguished);
    runs.push_back({{"parameter_set", name}, {"params", p.describe()}, {"entries", eval_json(m, rows)}});
  }
  Json viol = Json::array();
  for (const auto& v : empirical_h_monotonicity(f, m.weyl->roots()))
    viol.push_back({{"lower", v.lower}, {"upper", v.upper}, {"h_lower", to_json(v.h_lower)},
                    {"h_upper", to_json(v.h_upper)}});
  j["runs"] = runs;
  j["monotonicity_violations"] = viol;
  emit(j);
  return ok && viol.empty() ? 0 : 1;
}

int cmd_springer_derive(const Config& c) {
  auto m = model_of(c);
  SpringerFile f;
  f.type = std::string(1, cartan_letter(m.weyl->roots().type));
  f.rank = m.weyl->dim();
  for (const auto& arg : c.param_sets) {
    const auto colon = arg.find(':');
    const auto comma = arg.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos)
      throw UsageError("--param-set expects name:c_long,c_short");
    f.parameter_sets.push_back({arg.substr(0, colon), parse_rat_arg(arg.substr(colon + 1, comma - colon - 1)),
                                parse_rat_arg(arg.substr(comma + 1))});
  }
  try {
    f.entries = derive_distinguished(*m.weyl, c.labels);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = dump_springer(f);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(c.out);
    if (!o) throw UsageError("cannot write " + c.out);
    o << text;
  }
  return 0;
}

int cmd_verify(const Config& c) {
  auto m = model_of(c);
  const std::vector<std::string> names{"wedge identity", "spin difference square", "isometry", "elliptic rank",
                                       "character tables"};
  const auto checks = verify_type(m);
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    rows.push_back({{"check", names[i]}, {"pass", checks[i].pass}, {"detail", checks[i].detail}});
    ok = ok && checks[i].pass;
  }
  const Check central = check_casimir_central(*m.pin, build_casimir(*m.pin, ParamFn::equal(m.weyl->roots())));
  rows.push_back({{"check", "Casimir centrality"}, {"pass", central.pass}, {"detail", central.detail}});
  ok = ok && central.pass;
  Json j = header("verify", c);
  j["checks"] = rows;
  j["pass"] = ok;
  emit(j);
  return ok ? 0 : 1;
}

void add_type(CLI::App* sub, Config& c) {
  sub->add_option("--type", c.type, "Cartan type letter")->required();
  sub->add_option("--rank", c.rank, "rank")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact elliptic character computations for Weyl groups and their Pin covers"};
  app.require_subcommand(1);
  Config c;
  app.add_flag("--serial", c.serial, "use the serial reference kernels");

  auto* info = app.add_subcommand("info", "root system summary");
  add_type(info, c);
  auto* classes = app.add_subcommand("classes", "conjugacy classes of W");
  add_type(classes, c);
  classes->add_flag("--elliptic", c.elliptic, "only classes without fixed vectors");
  auto* chartable = app.add_subcommand("chartable", "character table of W, W~ or W~'");
  add_type(chartable, c);
  chartable->add_option("--group", c.group, "W, Wtilde or Wtilde'");
  chartable->add_option("--format", c.format, "json, csv or pretty");
  auto* spin = app.add_subcommand("spin", "spin character difference per W~' class");
  add_type(spin, c);
  auto* pairing = app.add_subcommand("elliptic-pairing", "Gram matrix of the elliptic pairing");
  add_type(pairing, c);
  auto* casimir = app.add_subcommand("casimir", "Casimir scalars on genuine characters");
  add_type(casimir, c);
  casimir->add_option("--params", c.params, "equal, equal:c or geometric:c_long,c_short");
  casimir->add_option("--convention", c.convention, "negative (s_a(b) < 0) or positive");
  auto* bn = app.add_subcommand("bn-example", "type B_n discrete series family against Murnaghan-Nakayama");
  bn->add_option("--n", c.n, "rank")->required();
  auto* seval = app.add_subcommand("springer-eval", "elliptic characters from a Springer data file");
  seval->add_option("--type", c.type, "Cartan type letter (taken from the file)");
  seval->add_option("--rank", c.rank, "rank (taken from the file)");
  seval->add_option("--data", c.data, "data file")->required();
  seval->add_option("--params", c.params, "parameter specification, or 'file' for the file's sets");
  auto* derive = app.add_subcommand("springer-derive", "derive distinguished Springer data by j-induction");
  add_type(derive, c);
  derive->add_option("--labels", c.labels, "orbit labels in decreasing dimension, separated by ';'")->delimiter(';');
  derive->add_option("--param-set", c.param_sets, "name:c_long,c_short");
  derive->add_option("--out", c.out, "output file");
  auto* verify = app.add_subcommand("verify", "exact checks for one type");
  add_type(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (seval->parsed() && seval->count("--params") == 0) c.params = "file";

  try {
    if (info->parsed()) return cmd_info(c);
    if (classes->parsed()) return cmd_classes(c);
    if (chartable->parsed()) return cmd_chartable(c);
    if (spin->parsed()) return cmd_spin(c);
    if (pairing->parsed()) return cmd_pairing(c);
    if (casimir->parsed()) return cmd_casimir(c);
    if (bn->parsed()) return cmd_bn_example(c);
    if (seval->parsed()) return cmd_springer_eval(c);
    if (derive->parsed()) return cmd_springer_derive(c);
    if (verify->parsed()) return cmd_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
