#include "doctest.h"

#include "dlo/actions.hpp"
#include "dlo/endo_ops.hpp"
#include "dlo/random_maps.hpp"

using namespace dlo;

namespace {

const char* kChain = "a - 0\nb a 1\nc b 2\n";

std::vector<Rat> rats(std::initializer_list<int> xs) {
  std::vector<Rat> out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("forest parsing and validation") {
  auto t = parse_forest("# chain\na - 0\nb a 1  # middle\nc b 2\n");
  CHECK(t.size() == 3);
  CHECK(t.label(*t.find("c")) == 2);
  CHECK(t.ancestry(2) == std::vector<std::size_t>{2, 1, 0});
  CHECK(to_string(parse_forest(to_string(t))) == to_string(t));
  CHECK_THROWS_AS(parse_forest("a - 1\n"), ParseError);
  CHECK_THROWS_AS(parse_forest("a - 0\nb a 0\n"), ParseError);
  CHECK_THROWS_AS(parse_forest("a - 0\nb x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_forest("a - 0\na - 0\n"), ParseError);
  CHECK_THROWS_AS(parse_forest("a - 0 7\n"), ParseError);
  CHECK_THROWS_AS(make_point(t, 2, rats({1})), std::invalid_argument);
}

TEST_CASE("act examples") {
  auto t = parse_forest(kChain);
  auto p = make_point(t, 2, rats({0, 1}));
  CHECK(act(t, PiecewiseEndo::identity(), p) == p);
  CHECK(act(t, PiecewiseEndo::constant(5), p) == make_point(t, 1, rats({5})));
  CHECK(act(t, PiecewiseEndo::affine(1, 1), p) == make_point(t, 2, rats({1, 2})));
  CHECK(containment_check(t, PiecewiseEndo::constant(5), p));
}

TEST_CASE("collapse on a 0<2<3 chain keeps the smallest image points") {
  auto t = parse_forest("a - 0\nb a 2\nc b 3\n");
  auto p = make_point(t, 2, rats({0, 1, 2}));
  PiecewiseEndo f = parse_piecewise("(-inf,1) : 1*x\n[1,2] : 0*x + 1\n(2,inf) : 1*x - 1\n");
  auto q = act(t, f, p);
  CHECK(q == make_point(t, 1, rats({0, 1})));
  CHECK(containment_check(t, f, p));
}

TEST_CASE("fixpoint_check") {
  auto t = parse_forest(kChain);
  auto h = fixpoint_check(t, make_point(t, 2, rats({0, 1})));
  CHECK(h(Rat(0)) == 0);
  CHECK(h(Rat(1)) == 1);
  CHECK(compose(h, h) == h);
  CHECK(fixpoint_check(t, make_point(t, 1, rats({7}))) == PiecewiseEndo::constant(7));
  CHECK(fixpoint_check(t, make_point(t, 0, {})) == PiecewiseEndo::constant(0));
}

TEST_CASE("action laws on admissible forests") {
  std::mt19937_64 rng(11);
  std::vector<std::string> forests = {kChain, "a - 0\nb a 1\nc - 0\nd c 2\n"};
  for (int k = 0; k < 4; ++k) forests.push_back(to_string(random_forest(rng, 8)));
  for (const auto& text : forests) {
    auto t = parse_forest(text);
    CHECK_FALSE(inadmissible_node(t));
    std::vector<GeneralEndo> fs;
    for (int i = 0; i < 20; ++i) fs.push_back(random_piecewise(rng, i % 4 == 3 ? MapKind::constant : MapKind::any, 4, 4));
    std::vector<OrbitPoint> ps;
    for (int i = 0; i < 20; ++i) ps.push_back(random_point(rng, t));
    auto r = verify_action(t, fs, ps);
    CHECK(r.checks > 8000);
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
    for (const auto& p : ps) CHECK_NOTHROW(fixpoint_check(t, p));
  }
}

TEST_CASE("maps agreeing on B act alike") {
  std::mt19937_64 rng(5);
  auto t = random_forest(rng, 10);
  for (int i = 0; i < 100; ++i) {
    auto p = random_point(rng, t);
    auto f1 = random_piecewise(rng, MapKind::any, 4, 4);
    std::set<Rat> b(p.set.begin(), p.set.end());
    auto f2 = b.empty() ? PiecewiseEndo::constant(random_rat(rng)) : compose(f1, idempotent_with_image(b));
    CHECK(act(t, f1, p) == act(t, f2, p));
  }
}

TEST_CASE("composition law breaks on a forest skipping labels above 1") {
  auto t = parse_forest("a - 0\nb a 2\nc b 4\n");
  REQUIRE(inadmissible_node(t) == t.find("b"));
  auto p = make_point(t, 2, rats({0, 1, 2, 3}));
  GeneralEndo g = parse_piecewise("(-inf,1] : 1*x + 1\n(1,2] : 0*x + 2\n(2,inf) : 1*x\n");
  GeneralEndo f = parse_piecewise("(-inf,1) : 1*x\n[1,2] : 0*x + 1\n(2,inf) : 1*x - 1\n");
  auto r = verify_action(t, {f, g}, {p});
  CHECK_FALSE(r.ok());
  CHECK(act(t, compose(f, g), p) == make_point(t, 1, rats({1, 2})));
  CHECK(act(t, f, act(t, g, p)) == make_point(t, 0, {}));
}
