#include "ellchar/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ellchar {

FinGroup FinGroup::generate(const std::vector<RatMatrix>& gens, std::size_t bound) {
  if (gens.empty()) throw GroupError("no generators");
  const std::size_t n = gens.front().rows();
  FinGroup g;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> rmul;

  g.matrices_.push_back(RatMatrix::identity(n));
  g.parent_.push_back(-1);
  g.last_gen_.push_back(-1);
  index.emplace(g.matrices_[0].key(), 0);
  rmul.emplace_back(gens.size(), -1);

  std::vector<int> layer{0};
  while (!layer.empty()) {
    struct Cand {
      RatMatrix m;
      int parent, gen;
    };
    std::vector<Cand> found;
    std::unordered_map<std::string, int> found_at;
    std::vector<std::pair<std::pair<int, int>, int>> pending;  // (a, gen) -> candidate
    for (int a : layer) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        RatMatrix m = g.matrices_[a] * gens[s];
        std::string k = m.key();
        if (auto it = index.find(k); it != index.end()) {
          rmul[a][s] = it->second;
          continue;
        }
        auto [it, fresh] = found_at.emplace(k, static_cast<int>(found.size()));
        if (fresh) found.push_back({std::move(m), a, static_cast<int>(s)});
        pending.push_back({{a, static_cast<int>(s)}, it->second});
      }
    }
    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return found[x].m.data() < found[y].m.data(); });
    std::vector<int> new_index(found.size());
    std::vector<int> next;
    for (int c : order) {
      int id = static_cast<int>(g.matrices_.size());
      new_index[c] = id;
      index.emplace(found[c].m.key(), id);
      g.matrices_.push_back(std::move(found[c].m));
      g.parent_.push_back(found[c].parent);
      g.last_gen_.push_back(found[c].gen);
      rmul.emplace_back(gens.size(), -1);
      next.push_back(id);
    }
    for (const auto& [ag, c] : pending) rmul[ag.first][ag.second] = new_index[c];
    if (g.matrices_.size() > bound) throw GroupError("group closure exceeds the configured bound");
    layer = std::move(next);
  }

  const int order = static_cast<int>(g.matrices_.size());
  g.mul_.assign(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    g.mul_[a][0] = a;
    for (int b = 1; b < order; ++b) g.mul_[a][b] = rmul[g.mul_[a][g.parent_[b]]][g.last_gen_[b]];
  }
  g.finish();
  return g;
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> mul) {
  const std::size_t n = mul.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[a].size() != n) throw GroupError("multiplication table is not square");
    if (mul[a][0] != static_cast<int>(a) || mul[0][a] != static_cast<int>(a))
      throw GroupError("element 0 is not the identity");
  }
  FinGroup g;
  g.mul_ = std::move(mul);
  g.finish();
  return g;
}

void FinGroup::finish() {
  const int n = order();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw GroupError("element without inverse");
  }
  elt_order_.assign(n, 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul_[x][a];
      if (++k > n) throw GroupError("element of infinite order");
    }
    elt_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  class_of_.assign(n, -1);
  classes_.clear();
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    const int id = static_cast<int>(classes_.size());
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      int c = mul_[mul_[g][a]][inv_[g]];
      if (class_of_[c] < 0) {
        class_of_[c] = id;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

int FinGroup::power(int a, long k) const {
  long e = elt_order_[a];
  k %= e;
  if (k < 0) k += e;
  int x = 0;
  for (long i = 0; i < k; ++i) x = mul_[x][a];
  return x;
}

int FinGroup::power_class(int c, long k) const { return class_of_[power(class_rep(c), k)]; }

int FinGroup::find(const RatMatrix& m) const {
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (matrices_[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<int> FinGroup::word(int a) const {
  if (parent_.empty()) throw GroupError("group has no generator words");
  std::vector<int> w;
  for (int x = a; x != 0; x = parent_[x]) w.push_back(last_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

FinGroup FinGroup::subgroup(const std::vector<int>& elems) const {
  if (elems.empty() || elems.front() != 0) throw GroupError("subgroup must list the identity first");
  std::vector<int> local(order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int p = local[mul_[elems[i]][elems[j]]];
      if (p < 0) throw GroupError("subset is not closed under multiplication");
      t[i][j] = p;
    }
  }
  return from_table(std::move(t));
}

Embedding::Embedding(const FinGroup& h, const FinGroup& g, std::vector<int> elements)
    : sub(&h), super(&g), element_map(std::move(elements)) {
  if (static_cast<int>(element_map.size()) != h.order()) throw GroupError("embedding has the wrong size");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (element_map[h.mul(a, b)] != g.mul(element_map[a], element_map[b]))
        throw GroupError("map is not a homomorphism onto a subgroup");
  for (int c = 0; c < h.num_classes(); ++c) class_fusion.push_back(g.class_of(element_map[h.class_rep(c)]));
}

ClassFunction::ClassFunction(const FinGroup& g, std::vector<CycNum> values) : g_(&g), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g.num_classes()) throw GroupError("class function has the wrong length");
}

ClassFunction ClassFunction::constant(const FinGroup& g, const CycNum& v) {
  return ClassFunction(g, std::vector<CycNum>(g.num_classes(), v));
}

void ClassFunction::check_same(const ClassFunction& o) const {
  if (g_ != o.g_) throw GroupError("class functions on different groups");
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& x : r.v_) x = x.conj();
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const CycNum& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.g_ == b.g_ && a.v_ == b.v_; }

bool ClassFunction::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const CycNum& x) { return x.is_zero(); });
}

CycNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (&f.group() != &g.group()) throw GroupError("class functions on different groups");
  const FinGroup& G = f.group();
  CycNum s;
  for (int c = 0; c < G.num_classes(); ++c) s += f[c].conj() * g[c] * Rat(G.class_size(c));
  return s * Rat(1, G.order());
}

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) {
  if (&f.group() != &g.group()) throw GroupError("class functions on different groups");
  std::vector<CycNum> v(f.size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f[c] * g[c];
  return ClassFunction(f.group(), std::move(v));
}

ClassFunction twist_sgn(const ClassFunction& f, const ClassFunction& sgn) { return tensor(f, sgn); }

ClassFunction restrict(const ClassFunction& f, const Embedding& e) {
  if (&f.group() != e.super) throw GroupError("restriction from the wrong group");
  std::vector<CycNum> v;
  for (int c : e.class_fusion) v.push_back(f[c]);
  return ClassFunction(*e.sub, std::move(v));
}

ClassFunction induce(const ClassFunction& f, const Embedding& e) {
  if (&f.group() != e.sub) throw GroupError("induction from the wrong group");
  const FinGroup& G = *e.super;
  const FinGroup& H = *e.sub;
  std::vector<CycNum> v(G.num_classes());
  for (int d = 0; d < H.num_classes(); ++d) {
    int c = e.class_fusion[d];
    v[c] += f[d] * (Rat(static_cast<long>(G.order()) * H.class_size(d)) / (static_cast<long>(H.order()) * G.class_size(c)));
  }
  return ClassFunction(G, std::move(v));
}

std::vector<CycNum> CharTable::decompose(const ClassFunction& f) const {
  std::vector<CycNum> m;
  for (const auto& r : rows) m.push_back(inner_product(r, f));
  return m;
}

int CharTable::find_row(const ClassFunction& f) const {
  for (int i = 0; i < size(); ++i)
    if (rows[i] == f) return i;
  return -1;
}

}  // namespace ellchar
