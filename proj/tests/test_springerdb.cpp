#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/verify.hpp"

using namespace ellchar;

namespace {

std::string data(const std::string& name) { return std::string(ELLCHAR_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("empty file gives an empty list") {
  const SpringerFile f = parse_springer("  \n");
  CHECK(f.entries.empty());
}

TEST_CASE("regular entry round-trips byte for byte") {
  auto w = WeylGroup::build(CartanType::G, 2);
  SpringerFile f;
  f.type = "G";
  f.rank = 2;
  f.entries.push_back(regular_entry(*w, ParamFn::equal(w->roots())));
  const std::string text = dump_springer(f);
  CHECK(dump_springer(parse_springer(text)) == text);
  CHECK(validate_springer(parse_springer(text), *w).front() == w->table().find_row(w->sgn()));
}

TEST_CASE("regular entry solves alpha_i(s) = 2") {
  for (auto [t, n] : {std::pair{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::B, 3}, {CartanType::F, 4}}) {
    auto w = WeylGroup::build(t, n);
    const RootSystem& rs = w->roots();
    const SpringerEntry e = regular_entry(*w, ParamFn::equal(rs));
    for (int i = 0; i < n; ++i) CHECK(rs.inner(rs.simple_root(i), *e.s_vector) == 2);
    CHECK(*e.h_value == rs.inner(*e.s_vector, *e.s_vector));
  }
  auto a1 = WeylGroup::build(CartanType::A, 1);
  CHECK(*regular_entry(*a1, ParamFn::equal(a1->roots())).h_value == 2);
}

TEST_CASE("A2: the neutral element does not depend on the simple root order") {
  auto w = WeylGroup::build(CartanType::A, 2);
  const RootSystem& rs = w->roots();
  const RatVec s = solve_neutral(rs, {Rat(2), Rat(2)});
  // Independent solve with the simple roots swapped.
  RatMatrix g(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = rs.inner(rs.simple_root(1 - i), rs.simple_root(1 - j));
  const RatVec x = *solve(g, {Rat(2), Rat(2)});
  RatVec t(rs.ambient_dim, Rat(0));
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < rs.ambient_dim; ++k) t[k] += x[j] * rs.simple_root(1 - j)[k];
  CHECK(s == t);
  CHECK(rs.inner(s, s) == 8);
}

TEST_CASE("mismatched h_value is rejected") {
  auto w = WeylGroup::build(CartanType::A, 2);
  SpringerFile f;
  f.type = "A";
  f.rank = 2;
  SpringerEntry e = regular_entry(*w, ParamFn::equal(w->roots()));
  e.h_value = *e.h_value + 1;
  f.entries.push_back(e);
  CHECK_THROWS_AS(validate_springer(parse_springer(dump_springer(f)), *w), SchemaError);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_springer("{"), SchemaError);
  CHECK_THROWS_AS(parse_springer(R"({"type":"A","rank":1})"), SchemaError);
  CHECK_THROWS_AS(parse_springer(R"({"type":"A","rank":1,"entries":[{"nilpotent":"x","phi":"triv",
    "sigma_top":{"degree":2,"values":[1,-1]},"h_value":"2","quasidistinguished":true,"closure_above":[]}]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_springer(R"({"type":"A","rank":1,"entries":[{"nilpotent":"x","phi":"triv",
    "sigma_top":{"degree":1,"values":[1,-1]},"h_value":"2","quasidistinguished":true,"closure_above":["y"]}]})"),
                  SchemaError);
  auto w = WeylGroup::build(CartanType::A, 1);
  const SpringerFile unknown = parse_springer(R"({"type":"A","rank":1,"entries":[{"nilpotent":"x","phi":"triv",
    "sigma_top":{"degree":1,"values":[1,0]},"h_value":"2","quasidistinguished":true,"closure_above":[]}]})");
  CHECK_THROWS_AS(validate_springer(unknown, *w), SchemaError);
}

TEST_CASE("b-values") {
  auto w = WeylGroup::build(CartanType::G, 2);
  auto b = b_values(*w);
  CHECK(b[w->table().find_row(ClassFunction::constant(w->group(), CycNum(1)))] == 0);
  CHECK(b[w->table().find_row(w->sgn())] == 6);
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<int>{0, 1, 2, 3, 3, 6});
}

TEST_CASE("distinguished orbits by j-induction") {
  auto g2 = WeylGroup::build(CartanType::G, 2);
  const auto e = derive_distinguished(*g2);
  REQUIRE(e.size() == 2);
  CHECK(e[0].nilpotent == "22");
  CHECK(e[0].sigma_top == fingerprint_of(g2->sgn()));
  CHECK(e[1].sigma_top.degree == 2);
  CHECK(e[1].closure_above == std::vector<std::string>{"22"});
  CHECK(derive_distinguished(*WeylGroup::build(CartanType::F, 4)).size() == 4);
  CHECK(derive_distinguished(*WeylGroup::build(CartanType::B, 3)).size() == 1);
}

TEST_CASE("shipped data files validate and regenerate identically") {
  struct F {
    const char* file;
    CartanType t;
    int n;
    std::vector<std::string> labels;
  };
  const F files[] = {{"springer_G2.json", CartanType::G, 2, {"G2", "G2(a1)"}},
                     {"springer_B3.json", CartanType::B, 3, {"(7)"}},
                     {"springer_B4.json", CartanType::B, 4, {"(9)", "(5,3,1)"}},
                     {"springer_F4.json", CartanType::F, 4, {"F4", "F4(a1)", "F4(a2)", "F4(a3)"}}};
  for (const auto& f : files) {
    CAPTURE(f.file);
    const SpringerFile sf = load_springer_file(data(f.file));
    auto w = WeylGroup::build(f.t, f.n);
    CHECK_NOTHROW(validate_springer(sf, *w));
    CHECK(empirical_h_monotonicity(sf, w->roots()).empty());
    SpringerFile again = sf;
    again.entries = derive_distinguished(*w, f.labels);
    CHECK(dump_springer(again) == dump_springer(sf));
  }
}

TEST_CASE("monotonicity on B4 partitions follows dominance") {
  const SpringerFile f = load_springer_file(data("springer_B4.json"));
  auto w = WeylGroup::build(CartanType::B, 4);
  REQUIRE(f.entries.size() == 2);
  CHECK(entry_h(f.entries[0], w->roots()) > entry_h(f.entries[1], w->roots()));
  SpringerFile flipped = f;
  flipped.entries[0].closure_above = {"(5,3,1)"};
  flipped.entries[1].closure_above = {};
  CHECK(empirical_h_monotonicity(flipped, w->roots()).size() == 1);
  SpringerFile single = f;
  single.entries.resize(1);
  CHECK(empirical_h_monotonicity(single, w->roots()).empty());
}
