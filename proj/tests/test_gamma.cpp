#include "doctest.h"

#include "dlo/enumeration.hpp"
#include "dlo/gamma_build.hpp"
#include "dlo/ppair.hpp"
#include "dlo/random_maps.hpp"

#include <algorithm>

using namespace dlo;

namespace {

const Variant all_variants[] = {Variant::core, Variant::plus, Variant::minus, Variant::pm};

void check_ok(GammaCert& cert, std::uint64_t seed, std::size_t samples = 120, std::size_t pairs = 60) {
  std::mt19937_64 rng(seed);
  auto r = check_certificate(cert, rng, samples, pairs);
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
  CHECK(r.checks > samples);
}

void check_intertwines(CoordCert& cert, const CommutingPair& cp) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rat x = enumerate(i);
    CHECK(cp.alpha(cert.apply(x)) == cert.apply(cp.beta(x)));
    CHECK(cp.alpha_inv(cp.alpha(x)) == x);
  }
}

}  // namespace

TEST_CASE("sim on interval unions") {
  ImageSpec a = IntervalUnion({RatInterval(ExtRat::neg_inf(), false, 0, false), RatInterval(1, true, ExtRat::pos_inf(), false)});
  CHECK(sim_related(a, make_rat(1, 5), make_rat(4, 5)));
  CHECK_FALSE(sim_related(a, -1, 2));
  CHECK(sim_related(a, 7, 7));
  CHECK_FALSE(sim_related(a, make_rat(1, 2), make_rat(3, 2)));
  CHECK(sim_related(a, make_rat(1, 2), 1));
}

TEST_CASE("sim is an equivalence on random images") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 25; ++n) {
    auto f = random_piecewise(rng, MapKind::injective);
    ImageSpec a = f.image();
    for (int k = 0; k < 200; ++k) {
      Rat x = random_rat(rng, 6), y = random_rat(rng, 6), z = random_rat(rng, 6);
      CHECK(sim_related(a, x, x));
      CHECK(sim_related(a, x, y) == sim_related(a, y, x));
      if (sim_related(a, x, y) && sim_related(a, y, z)) CHECK(sim_related(a, x, z));
      Rat lo = std::min(x, y), hi = std::max(x, y);
      if (lo < z && z < hi && sim_related(a, x, y)) CHECK(sim_related(a, lo, z));
    }
  }
}

TEST_CASE("generic certificates") {
  for (Variant v : all_variants) {
    CAPTURE(to_string(v));
    auto c = gamma_generic(v);
    CHECK(c.cert->variant() == v);
    check_ok(*c.cert, 1);
    ImageSpec spec = c.cert;
    Rat a = c.g(0), b = c.g(1);
    CHECK_FALSE(sim_related(spec, a, b));
  }
}

TEST_CASE("p_check examples") {
  auto cert = gamma_generic_cert(Variant::core);
  CHECK(p_check(*cert, PPair{}).empty());

  Rat u = 0;
  Rat gu = cert->apply(u);
  Rat s = cert->apply(1);
  Rat t = cert->apply(2);
  PPair ok{FinitePartialMap({{gu, gu}, {s, t}}), FinitePartialMap({{u, u}, {1, 2}})};
  CHECK(p_check(*cert, ok).empty());

  PPair bad{FinitePartialMap(), FinitePartialMap({{u, u}})};
  auto v = p_check(*cert, bad);
  REQUIRE_FALSE(v.empty());
  bool clause4 = false;
  for (const auto& x : v) clause4 = clause4 || x.clause == 4;
  CHECK(clause4);

  PPair colour{FinitePartialMap({{gu, cert->member(elem(Rat(1)))}}), FinitePartialMap()};
  auto vc = p_check(*cert, colour);
  REQUIRE_FALSE(vc.empty());
  CHECK(vc.front().clause == 1);
  CHECK_THROWS_AS(extend_pair(cert, bad), std::invalid_argument);
}

TEST_CASE("extend_pair on random P-pairs") {
  std::mt19937_64 rng(99);
  for (Variant v : all_variants) {
    auto cert = gamma_generic_cert(v);
    for (int n = 0; n < 6; ++n) {
      PPair p = random_ppair(cert, rng);
      auto viol = p_check(*cert, p);
      for (const auto& x : viol) MESSAGE(x.clause << ": " << x.detail);
      REQUIRE(viol.empty());
      auto cp = extend_pair(cert, p);
      for (const auto& [x, y] : p.a) CHECK(cp.alpha(x) == y);
      for (const auto& [x, y] : p.b) CHECK(cp.beta(x) == y);
      check_intertwines(*cert, cp);
    }
  }
  auto cert = gamma_generic_cert(Variant::core);
  auto cp = extend_pair(cert, PPair{});
  check_intertwines(*cert, cp);
}

TEST_CASE("recover witnesses") {
  std::mt19937_64 rng(4);
  for (Variant v : all_variants) {
    auto cert = gamma_generic_cert(v);
    int seen[4] = {0, 0, 0, 0};
    CHECK(recover_witness(cert, 0, cert->apply(0)).equal);
    for (int n = 0; n < 30; ++n) {
      Rat u = random_rat(rng, 5);
      Rat s;
      // Image point, point of a blue class (odd integers), point of a red class.
      if (n % 3 == 0)
        s = cert->apply(random_rat(rng, 5));
      else
        s = cert->at(Elem{Rat(2 * (n % 7) + n % 3 % 2), random_rat(rng, 5)});
      auto r = recover_witness(cert, u, s);
      if (r.equal) {
        CHECK(cert->apply(u) == s);
        continue;
      }
      ++seen[r.recipe];
      REQUIRE(r.witness);
      CHECK(p_check(*cert, r.pair).empty());
      CHECK(r.witness->beta(u) == u);
      CHECK(r.witness->alpha(s) == r.t);
      CHECK(r.t != s);
      CHECK(r.witness->alpha(cert->apply(u)) == cert->apply(u));
      check_intertwines(*cert, *r.witness);
    }
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
    CHECK(seen[3] > 0);
  }
}

TEST_CASE("composition of certified embeddings") {
  for (Variant v : all_variants) {
    CAPTURE(to_string(v));
    auto inner = gamma_generic(v);
    auto outer = gamma_generic_cert(v);
    auto c = compose_certified(outer, inner.cert);
    for (std::uint64_t i = 0; i < 50; ++i) CHECK(c.g(enumerate(i)) == outer->apply(inner.g(enumerate(i))));
    check_ok(*c.cert, 2);
  }
  CHECK_THROWS_AS(compose_certified(gamma_generic_cert(Variant::core), gamma_generic(Variant::plus).cert),
                  std::invalid_argument);
}

TEST_CASE("absorb coterminal embeddings") {
  auto jump = parse_piecewise("(-inf,0) : x\n[0,inf) : x + 1\n");
  auto isolated = parse_piecewise("(-inf,0) : x\n[0,0] : 1\n(0,inf) : x + 2\n");
  for (const auto& f : {PiecewiseEndo::identity(), PiecewiseEndo::affine(2, 0), jump, isolated}) {
    CAPTURE(to_string(f));
    auto ab = absorb(f);
    CHECK(ab.variant == Variant::core);
    for (std::uint64_t i = 0; i < 50; ++i) CHECK(ab.gf(enumerate(i)) == ab.g(f(enumerate(i))));
    check_ok(*ab.gf_cert, 3);
    check_ok(*ab.g_cert, 5, 60, 30);
  }
  CHECK_THROWS_AS(absorb(PiecewiseEndo::constant(0)), std::invalid_argument);
}

TEST_CASE("absorb bounded embeddings") {
  struct Case {
    IntervalUnion a;
    Variant v;
  };
  std::vector<Case> cases = {
      {IntervalUnion({RatInterval::open(ExtRat::neg_inf(), 0)}), Variant::plus},
      {IntervalUnion({RatInterval::open(0, ExtRat::pos_inf())}), Variant::minus},
      {IntervalUnion({RatInterval::open(0, 1)}), Variant::pm},
      {IntervalUnion({RatInterval(0, false, 1, true), RatInterval::open(2, 3)}), Variant::pm},
  };
  for (const auto& c : cases) {
    CAPTURE(to_string(c.a));
    auto ab = absorb(embedding_onto(c.a));
    CHECK(ab.variant == c.v);
    check_ok(*ab.gf_cert, 6, 80, 40);
  }
}

TEST_CASE("absorb places holes in single classes") {
  auto jump = parse_piecewise("(-inf,0) : x\n[0,inf) : x + 1\n");
  auto ab = absorb(jump);
  // The hole [0,1) joins the class of the image point 1.
  Elem red = ab.gf_cert->class_of(ab.gf(0));
  for (Rat x : {Rat(0), make_rat(1, 3), make_rat(1, 2), make_rat(99, 100), Rat(1)}) CHECK(ab.gf_cert->class_of(ab.g(x)) == red);
  CHECK(ab.gf_cert->class_colour(red) == Colour::red);
  CHECK(ab.gf_cert->class_of(ab.g(make_rat(-1, 100))) < red);
  CHECK(ab.gf_cert->class_of(ab.g(make_rat(101, 100))) > red);

  auto gap = parse_piecewise("(-inf,0) : x\n[0,inf) : x + 2\n");
  auto ab2 = absorb(gap);
  // Here [0,2) joins 2; a free hole needs an image bounded away on both sides.
  CHECK(ab2.gf_cert->class_of(ab2.g(1)) == ab2.gf_cert->class_of(ab2.gf(0)));

  auto free_hole = absorb(embedding_onto(
      IntervalUnion({RatInterval::open(ExtRat::neg_inf(), 0), RatInterval::open(1, ExtRat::pos_inf())})));
  Elem blue = free_hole.gf_cert->class_of(free_hole.g(make_rat(1, 2)));
  CHECK(free_hole.gf_cert->class_colour(blue) == Colour::blue);
  for (Rat x : {Rat(0), make_rat(1, 3), Rat(1)}) CHECK(free_hole.gf_cert->class_of(free_hole.g(x)) == blue);
  check_ok(*free_hole.gf_cert, 8, 80, 40);
}

TEST_CASE("composite classes of outer blue points") {
  auto inner = gamma_generic(Variant::core);
  auto outer = gamma_generic_cert(Variant::core);
  auto c = compose_certified(outer, inner.cert);
  std::vector<Rat> zs;
  for (long k = -6; k <= 6; ++k) {
    zs.push_back(outer->member(elem(Rat(2 * k + 1))));
    zs.push_back(outer->member(elem(make_rat(2 * k + 1, 3))));
    zs.push_back(c.g(Rat(k)));
  }
  std::sort(zs.begin(), zs.end());
  for (std::size_t i = 1; i < zs.size(); ++i) CHECK(c.cert->class_of(zs[i - 1]) <= c.cert->class_of(zs[i]));
  CHECK(outer->psi().consistent());
  check_ok(*c.cert, 9);
}
