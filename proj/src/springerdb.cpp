#include "ellchar/springerdb.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ellchar {

using ojson = nlohmann::ordered_json;

namespace {

Rat parse_rat(const ojson& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw SchemaError(where + ": expected a rational written as a string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(where + ": malformed rational");
  if (sgn(r.get_den()) == 0) throw SchemaError(where + ": zero denominator");
  r.canonicalize();
  return r;
}

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

long as_long(const ojson& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long>();
}

std::string as_string(const ojson& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

long rat_to_long(const CycNum& v) {
  auto r = is_rational(v);
  if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p())
    throw std::invalid_argument("character value is not a machine integer");
  return r->get_num().get_si();
}

int positive_count(const RootSystem& rs, const std::vector<bool>& in_j) {
  int n = 0;
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    if (!rs.positive[a]) continue;
    bool inside = true;
    for (int i = 0; i < rs.rank; ++i)
      if (!in_j[i] && rs.simple_coords[a][i] != 0) inside = false;
    n += inside;
  }
  return n;
}

}  // namespace

SpringerFile parse_springer(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top level must be an object");

  SpringerFile f;
  f.type = as_string(field(doc, "type", "file"), "type");
  f.rank = static_cast<int>(as_long(field(doc, "rank", "file"), "rank"));
  if (f.rank < 1) throw SchemaError("rank must be positive");

  if (auto it = doc.find("parameter_sets"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("parameter_sets must be an array");
    for (const auto& p : *it) {
      ParameterSet ps;
      ps.name = as_string(field(p, "name", "parameter set"), "parameter set name");
      ps.c_long = parse_rat(field(p, "c_long", ps.name), ps.name + ".c_long");
      ps.c_short = parse_rat(field(p, "c_short", ps.name), ps.name + ".c_short");
      f.parameter_sets.push_back(ps);
    }
  }

  const ojson& entries = field(doc, "entries", "file");
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  std::set<std::string> names;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const ojson& e = entries[k];
    const std::string where = "entry " + std::to_string(k);
    if (!e.is_object()) throw SchemaError(where + ": expected an object");
    SpringerEntry se;
    se.nilpotent = as_string(field(e, "nilpotent", where), where + ".nilpotent");
    se.phi = as_string(field(e, "phi", where), where + ".phi");
    const ojson& st = field(e, "sigma_top", where);
    se.sigma_top.degree = as_long(field(st, "degree", where), where + ".sigma_top.degree");
    const ojson& vals = field(st, "values", where);
    if (!vals.is_array() || vals.empty()) throw SchemaError(where + ": sigma_top.values must be a nonempty array");
    for (const auto& v : vals) se.sigma_top.values.push_back(as_long(v, where + ".sigma_top.values"));
    if (se.sigma_top.values.front() != se.sigma_top.degree)
      throw SchemaError(where + ": sigma_top degree differs from its value at the identity");

    if (auto it = e.find("s_vector"); it != e.end()) {
      if (!it->is_array()) throw SchemaError(where + ": s_vector must be an array");
      RatVec s;
      for (const auto& x : *it) s.push_back(parse_rat(x, where + ".s_vector"));
      se.s_vector = s;
    }
    if (auto it = e.find("h_value"); it != e.end()) se.h_value = parse_rat(*it, where + ".h_value");
    if (!se.s_vector && !se.h_value) throw SchemaError(where + ": needs s_vector or h_value");

    const ojson& q = field(e, "quasidistinguished", where);
    if (!q.is_boolean()) throw SchemaError(where + ".quasidistinguished: expected a boolean");
    se.quasidistinguished = q.get<bool>();
    const ojson& ca = field(e, "closure_above", where);
    if (!ca.is_array()) throw SchemaError(where + ".closure_above: expected an array");
    for (const auto& x : ca) se.closure_above.push_back(as_string(x, where + ".closure_above"));

    if (!names.insert(se.nilpotent + "|" + se.phi).second)
      throw SchemaError(where + ": duplicate pair (" + se.nilpotent + ", " + se.phi + ")");
    f.entries.push_back(std::move(se));
  }

  std::set<std::string> orbits;
  for (const auto& e : f.entries) orbits.insert(e.nilpotent);
  for (const auto& e : f.entries)
    for (const auto& u : e.closure_above)
      if (!orbits.count(u)) throw SchemaError(e.nilpotent + ": closure_above names unknown orbit " + u);
  return f;
}

std::string dump_springer(const SpringerFile& f) {
  ojson doc;
  doc["type"] = f.type;
  doc["rank"] = f.rank;
  if (!f.parameter_sets.empty()) {
    ojson ps = ojson::array();
    for (const auto& p : f.parameter_sets)
      ps.push_back({{"name", p.name}, {"c_long", rat_string(p.c_long)}, {"c_short", rat_string(p.c_short)}});
    doc["parameter_sets"] = ps;
  }
  ojson entries = ojson::array();
  for (const auto& e : f.entries) {
    ojson j;
    j["nilpotent"] = e.nilpotent;
    j["phi"] = e.phi;
    j["sigma_top"] = {{"degree", e.sigma_top.degree}, {"values", e.sigma_top.values}};
    if (e.s_vector) {
      ojson s = ojson::array();
      for (const auto& x : *e.s_vector) s.push_back(rat_string(x));
      j["s_vector"] = s;
    }
    if (e.h_value) j["h_value"] = rat_string(*e.h_value);
    j["quasidistinguished"] = e.quasidistinguished;
    j["closure_above"] = e.closure_above;
    entries.push_back(j);
  }
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

SpringerFile load_springer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_springer(ss.str());
}

Fingerprint fingerprint_of(const ClassFunction& chi) {
  Fingerprint fp;
  for (const auto& v : chi.values()) fp.values.push_back(rat_to_long(v));
  fp.degree = fp.values.front();
  return fp;
}

int resolve_fingerprint(const Fingerprint& fp, const CharTable& t) {
  int hit = -1;
  for (int r = 0; r < t.size(); ++r) {
    if (static_cast<int>(fp.values.size()) != t.group->num_classes()) break;
    bool same = true;
    for (std::size_t c = 0; c < fp.values.size() && same; ++c)
      same = t.rows[r][static_cast<int>(c)] == CycNum(fp.values[c]);
    if (!same) continue;
    if (hit >= 0) throw SchemaError("fingerprint matches two rows");
    hit = r;
  }
  if (hit < 0) throw SchemaError("fingerprint matches no irreducible character");
  return hit;
}

Rat entry_h(const SpringerEntry& e, const RootSystem& rs) {
  if (e.s_vector) {
    if (static_cast<int>(e.s_vector->size()) != rs.ambient_dim)
      throw SchemaError(e.nilpotent + ": s_vector has the wrong length");
    const Rat h = rs.inner(*e.s_vector, *e.s_vector);
    if (e.h_value && *e.h_value != h) throw SchemaError(e.nilpotent + ": h_value differs from <s, s>");
    return h;
  }
  return *e.h_value;
}

std::vector<int> validate_springer(const SpringerFile& f, const WeylGroup& w) {
  const RootSystem& rs = w.roots();
  if (f.type != std::string(1, cartan_letter(rs.type)) || f.rank != rs.rank)
    throw SchemaError("file is for " + f.type + std::to_string(f.rank) + ", group is " + rs.name());
  std::vector<int> rows;
  for (const auto& e : f.entries) {
    try {
      rows.push_back(resolve_fingerprint(e.sigma_top, w.table()));
      entry_h(e, rs);
    } catch (const SchemaError& err) {
      throw SchemaError(e.nilpotent + ": " + err.what());
    }
  }
  return rows;
}

RatVec solve_neutral(const RootSystem& rs, const std::vector<Rat>& weights) {
  const int n = rs.rank;
  RatMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rs.inner(rs.simple_root(i), rs.simple_root(j));
  auto x = solve(g, weights);
  if (!x) throw std::logic_error("Gram matrix of simple roots is singular");
  RatVec s(rs.ambient_dim, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < rs.ambient_dim; ++k) s[k] += (*x)[j] * rs.simple_root(j)[k];
  return s;
}

SpringerEntry regular_entry(const WeylGroup& w, const ParamFn& c) {
  const RootSystem& rs = w.roots();
  std::vector<Rat> weights;
  for (int i = 0; i < rs.rank; ++i) weights.push_back(2 * c(rs.simple[i]));
  SpringerEntry e;
  e.nilpotent = "regular";
  e.phi = "triv";
  e.sigma_top = fingerprint_of(w.sgn());
  e.s_vector = solve_neutral(rs, weights);
  e.h_value = rs.inner(*e.s_vector, *e.s_vector);
  e.quasidistinguished = true;
  return e;
}

std::vector<int> b_values(const WeylGroup& w) {
  const FinGroup& g = w.group();
  const CharTable& t = w.table();
  const int top = w.roots().num_positive();

  // Molien series 1 / det(1 - q w) per class, truncated at degree `top`.
  std::vector<std::vector<Rat>> series(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    const std::vector<Rat> e = principal_minor_sums(w.v0_matrix(g.class_rep(c)));
    std::vector<Rat> d(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = (i % 2 ? -e[i] : e[i]);
    std::vector<Rat> inv(top + 1, Rat(0));
    inv[0] = 1;
    for (int k = 1; k <= top; ++k) {
      Rat s = 0;
      for (int i = 1; i <= k && i < static_cast<int>(d.size()); ++i) s -= d[i] * inv[k - i];
      inv[k] = s;
    }
    series[c] = std::move(inv);
  }

  std::vector<int> b(t.size(), -1);
  for (int r = 0; r < t.size(); ++r) {
    for (int k = 0; k <= top && b[r] < 0; ++k) {
      CycNum m;
      for (int c = 0; c < g.num_classes(); ++c)
        m += t.rows[r][c].conj() * CycNum(series[c][k] * g.class_size(c));
      if (!m.is_zero()) b[r] = k;
    }
    if (b[r] < 0) throw std::logic_error("character does not occur in low degree");
  }
  return b;
}

std::vector<SpringerEntry> derive_distinguished(const WeylGroup& w, const std::vector<std::string>& labels) {
  const RootSystem& rs = w.roots();
  const FinGroup& g = w.group();
  const int n = rs.rank;
  const int total = rs.num_positive();
  const std::vector<int> b = b_values(w);

  struct Found {
    int dim;
    std::string diagram;
    SpringerEntry e;
  };
  std::vector<Found> found;

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in_j(n);
    for (int i = 0; i < n; ++i) in_j[i] = (mask >> i) & 1u;
    const int nj = positive_count(rs, in_j);

    int deg2 = 0;
    for (std::size_t a = 0; a < rs.roots.size(); ++a) {
      if (!rs.positive[a]) continue;
      long h = 0;
      for (int i = 0; i < n; ++i)
        if (!in_j[i]) h += rs.simple_coords[a][i];
      deg2 += (h == 1);
    }
    if (n + 2 * nj != deg2) continue;

    // W_J by closure under the simple reflections in J.
    std::vector<int> elems{0};
    std::set<int> seen{0};
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (int i = 0; i < n; ++i) {
        if (!in_j[i]) continue;
        const int y = g.mul(elems[k], w.reflection(rs.simple[i]));
        if (seen.insert(y).second) elems.push_back(y);
      }
    std::sort(elems.begin(), elems.end());
    const FinGroup sub = g.subgroup(elems);
    const Embedding emb(sub, g, elems);
    const ClassFunction ind = induce(restrict(w.sgn(), emb), emb);
    const std::vector<CycNum> mult = w.table().decompose(ind);
    int row = -1;
    for (int r = 0; r < w.table().size(); ++r) {
      if (mult[r].is_zero() || b[r] != nj) continue;
      if (row >= 0 || mult[r] != CycNum(1))
        throw std::logic_error("j-induction of sgn is not irreducible");
      row = r;
    }
    if (row < 0) throw std::logic_error("j-induction of sgn is empty");

    std::vector<Rat> weights;
    std::string diagram;
    for (int i = 0; i < n; ++i) {
      weights.push_back(in_j[i] ? 0 : 2);
      diagram += in_j[i] ? '0' : '2';
    }
    SpringerEntry e;
    e.phi = "triv";
    e.sigma_top = fingerprint_of(tensor(w.table().rows[row], w.sgn()));
    e.s_vector = solve_neutral(rs, weights);
    e.h_value = rs.inner(*e.s_vector, *e.s_vector);
    e.quasidistinguished = true;
    found.push_back({2 * (total - nj), diagram, std::move(e)});
  }

  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.dim > b.dim; });
  if (!labels.empty() && labels.size() != found.size())
    throw std::invalid_argument("expected " + std::to_string(found.size()) + " orbit labels");
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (k > 0 && found[k].dim == found[k - 1].dim)
      throw std::logic_error("two distinguished orbits of the same dimension");
    found[k].e.nilpotent = labels.empty() ? found[k].diagram : labels[k];
  }

  std::vector<SpringerEntry> out;
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t u = 0; u < k; ++u) found[k].e.closure_above.push_back(found[u].e.nilpotent);
    out.push_back(found[k].e);
  }
  return out;
}

std::vector<Violation> empirical_h_monotonicity(const SpringerFile& f, const RootSystem& rs) {
  std::map<std::string, Rat> h;
  for (const auto& e : f.entries) h.emplace(e.nilpotent, entry_h(e, rs));
  std::vector<Violation> out;
  for (const auto& e : f.entries)
    for (const auto& u : e.closure_above) {
      const Rat& lo = h.at(e.nilpotent);
      const Rat& hi = h.at(u);
      if (!(hi > lo)) out.push_back({e.nilpotent, u, lo, hi});
    }
  return out;
}

}  // namespace ellchar
