#include "ellchar/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ellchar {

namespace {

RatVec unit(int dim, int i, const Rat& s = Rat(1)) {
  RatVec v(dim);
  v[i] = s;
  return v;
}

RatVec diff(int dim, int i, int j) {
  RatVec v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

bool supported(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return n >= 1 && n <= 5;
    case CartanType::B: return n >= 1 && n <= 4;
    case CartanType::C: return n >= 3 && n <= 4;
    case CartanType::D: return n == 4;
    case CartanType::G: return n == 2;
    case CartanType::F: return n == 4;
    default: return false;
  }
}

// Bourbaki simple roots in the standard ambient realization.
std::vector<RatVec> simple_roots(CartanType t, int n, int& dim) {
  std::vector<RatVec> s;
  switch (t) {
    case CartanType::A:
      dim = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(diff(dim, i, i + 1));
      break;
    case CartanType::B:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
      s.push_back(unit(dim, n - 1));
      break;
    case CartanType::C:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
      s.push_back(unit(dim, n - 1, Rat(2)));
      break;
    case CartanType::D: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
      RatVec last(dim);
      last[n - 2] = 1;
      last[n - 1] = 1;
      s.push_back(last);
      break;
    }
    case CartanType::G:
      dim = 3;
      s.push_back(diff(3, 0, 1));
      s.push_back(RatVec{Rat(-2), Rat(1), Rat(1)});
      break;
    case CartanType::F: {
      dim = 4;
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      Rat h(1, 2);
      s.push_back(RatVec{h, -h, -h, -h});
      break;
    }
    default: throw UnsupportedRootSystem("unsupported Cartan type");
  }
  return s;
}

}  // namespace

char cartan_letter(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

CartanType parse_cartan(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<CartanType>(c - 'A');
  }
  throw UnsupportedRootSystem("unknown Cartan type '" + s + "'");
}

std::string RootSystem::name() const { return std::string(1, cartan_letter(type)) + std::to_string(rank); }

Rat RootSystem::inner(const RatVec& a, const RatVec& b) const { return form_scale * dot(a, b); }

int RootSystem::num_positive() const {
  return static_cast<int>(std::count(positive.begin(), positive.end(), true));
}

int RootSystem::num_orbits() const { return orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1; }

int RootSystem::index_of(const RatVec& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

RatVec RootSystem::reflect(int root, const RatVec& v) const {
  const RatVec& a = roots[root];
  Rat f = 2 * inner(v, a) / inner(a, a);
  RatVec out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * a[i];
  return out;
}

RatMatrix RootSystem::reflection_matrix(int root) const {
  RatMatrix m(ambient_dim, ambient_dim);
  for (int j = 0; j < ambient_dim; ++j) {
    RatVec col = reflect(root, unit(ambient_dim, j));
    for (int i = 0; i < ambient_dim; ++i) m(i, j) = col[i];
  }
  return m;
}

RatVec RootSystem::ortho_coords(const RatVec& v) const {
  RatVec c(ortho_basis.size());
  for (std::size_t i = 0; i < ortho_basis.size(); ++i) c[i] = inner(v, ortho_basis[i]) / ortho_norms[i];
  return c;
}

int RootSystem::coxeter_number() const {
  RatMatrix c = RatMatrix::identity(ambient_dim);
  for (int i = 0; i < rank; ++i) c = c * reflection_matrix(simple[i]);
  RatMatrix p = c;
  const RatMatrix id = RatMatrix::identity(ambient_dim);
  for (int k = 1; k <= 1000; ++k) {
    if (p == id) return k;
    p = p * c;
  }
  throw std::logic_error("Coxeter element of infinite order");
}

void gram_schmidt(const RootSystem& rs, const std::vector<RatVec>& span, std::vector<RatVec>& basis,
                  std::vector<Rat>& norms) {
  basis.clear();
  norms.clear();
  for (const auto& v : span) {
    RatVec u = v;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rat f = rs.inner(v, basis[k]) / norms[k];
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= f * basis[k][i];
    }
    Rat q = rs.inner(u, u);
    if (sgn(q) == 0) continue;
    basis.push_back(u);
    norms.push_back(q);
  }
}

RootSystem build_root_system(CartanType type, int rank, const Rat& form_scale) {
  if (!supported(type, rank))
    throw UnsupportedRootSystem(std::string("unsupported root system ") + cartan_letter(type) + std::to_string(rank));
  if (sgn(form_scale) <= 0) throw std::invalid_argument("form scale must be positive");

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.form_scale = form_scale;
  std::vector<RatVec> simple = simple_roots(type, rank, rs.ambient_dim);

  // Closure of the simple roots under the simple reflections.
  std::set<RatVec> found(simple.begin(), simple.end());
  std::vector<RatVec> frontier = simple;
  auto reflect_by = [&](const RatVec& a, const RatVec& v) {
    Rat f = 2 * dot(v, a) / dot(a, a);
    RatVec out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * a[i];
    return out;
  };
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& v : frontier) {
      for (const auto& a : simple) {
        RatVec w = reflect_by(a, v);
        if (found.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }

  // Coordinates in the simple roots.
  RatMatrix gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram(i, j) = dot(simple[i], simple[j]);
  std::vector<std::pair<std::vector<long>, RatVec>> tagged;
  for (const auto& v : found) {
    RatVec rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(simple[i], v);
    auto x = solve(gram, rhs);
    if (!x) throw std::logic_error("simple roots are dependent");
    std::vector<long> coords;
    for (const auto& c : *x) {
      if (c.get_den() != 1) throw std::logic_error("root is not an integral combination of simple roots");
      coords.push_back(c.get_num().get_si());
    }
    tagged.emplace_back(std::move(coords), v);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [coords, v] : tagged) {
    bool pos = std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
    bool neg = std::all_of(coords.begin(), coords.end(), [](long c) { return c <= 0; });
    if (!pos && !neg) throw std::logic_error("root with mixed-sign simple coordinates");
    rs.positive.push_back(pos);
    rs.simple_coords.push_back(coords);
    rs.roots.push_back(v);
  }
  for (const auto& s : simple) rs.simple.push_back(rs.index_of(s));
  for (const auto& a : rs.roots) {
    Rat f = 2 / rs.inner(a, a);
    RatVec c = a;
    for (auto& x : c) x *= f;
    rs.coroots.push_back(c);
  }

  // Orbits under W: union of roots related by some reflection.
  const int nr = static_cast<int>(rs.roots.size());
  std::vector<int> parent(nr);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      int img = rs.index_of(rs.reflect(a, rs.roots[b]));
      parent[find(img)] = find(b);
    }
  }
  std::map<int, int> ids;
  for (int a = 0; a < nr; ++a) {
    int r = find(a);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
    rs.orbit.push_back(it->second);
  }

  if (rs.ambient_dim == rank) {
    for (int i = 0; i < rank; ++i) {
      rs.ortho_basis.push_back(unit(rank, i));
      rs.ortho_norms.push_back(form_scale);
    }
  } else {
    gram_schmidt(rs, simple, rs.ortho_basis, rs.ortho_norms);
  }
  return rs;
}

ParamFn ParamFn::equal(const RootSystem& rs, const Rat& c) {
  ParamFn p;
  p.values_.assign(rs.roots.size(), c);
  p.description_ = "equal:" + rat_string(c);
  return p;
}

ParamFn ParamFn::by_length(const RootSystem& rs, const Rat& c_long, const Rat& c_short) {
  if (sgn(c_long) <= 0 || sgn(c_short) <= 0) throw std::invalid_argument("parameters must be positive");
  Rat longest = 0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) longest = std::max(longest, rs.norm2(static_cast<int>(i)));
  ParamFn p;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    p.values_.push_back(rs.norm2(static_cast<int>(i)) == longest ? c_long : c_short);
  p.description_ = "geometric:" + rat_string(c_long) + "," + rat_string(c_short);
  return p;
}

bool ParamFn::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](const Rat& v) { return v == values_.front(); });
}

}  // namespace ellchar
