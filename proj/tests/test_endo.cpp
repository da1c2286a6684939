#include "doctest.h"

#include "dlo/endo_ops.hpp"
#include "dlo/enumeration.hpp"
#include "dlo/random_maps.hpp"

#include <map>
#include <set>

using namespace dlo;

namespace {

const PiecewiseEndo& jump_map() {
  static const PiecewiseEndo f = parse_piecewise("(-inf,0) : 1*x + 0\n[0,inf) : 1*x + 1\n");
  return f;
}

const PiecewiseEndo& plateau_map() {
  static const PiecewiseEndo f = parse_piecewise("(-inf,0) : 1*x\n[0,1] : 0*x + 0\n(1,inf) : 1*x - 1\n");
  return f;
}

std::vector<Rat> samples(std::size_t n) {
  std::vector<Rat> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(enumerate(i));
  return out;
}

// Brute-force view of a piece list: sample points from every piece plus the
// first enumerated rationals, and solve each piece directly for targets.
EndoClass oracle(const PiecewiseEndo& f) {
  std::vector<Rat> xs = samples(500);
  for (const auto& p : f.pieces()) {
    RationalStream s(p.domain);
    for (int k = 0; k < 3; ++k)
      if (auto n = s.next()) xs.push_back(n->second);
  }
  std::map<Rat, Rat> seen;
  bool injective = true;
  std::set<Rat> values;
  for (const auto& x : xs) {
    Rat y = f(x);
    values.insert(y);
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh && it->second != x) injective = false;
  }
  std::vector<Rat> targets = samples(500);
  const auto& ps = f.pieces();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const Rat& b = ps[i].domain.lower().value();
    Rat l = ps[i - 1].at(b);
    Rat r = ps[i].at(b);
    targets.insert(targets.end(), {l, r, Rat((l + r) / 2)});
  }
  bool surjective = true;
  for (const auto& y : targets) {
    bool hit = false;
    for (const auto& p : f.pieces()) {
      if (p.slope == 0 ? p.intercept == y : p.domain.contains(Rat((y - p.intercept) / p.slope))) hit = true;
    }
    if (!hit) surjective = false;
  }
  // Coterminality: a bounded end misses everything far enough out.
  const Piece& first = f.pieces().front();
  const Piece& last = f.pieces().back();
  if (first.slope == 0 || last.slope == 0) surjective = false;
  return EndoClass{values.size() == 1, injective, surjective};
}

}  // namespace

TEST_CASE("eval and parsing examples") {
  CHECK(jump_map()(-1) == -1);
  CHECK(jump_map()(0) == 1);
  CHECK(PiecewiseEndo::constant(3)(make_rat(17, 5)) == 3);
  CHECK(to_string(jump_map()) == "(-inf,0) : 1*x + 0\n[0,+inf) : 1*x + 1\n");
  CHECK(parse_piecewise(to_string(plateau_map())) == plateau_map());
  CHECK_THROWS_AS(parse_piecewise("(-inf,0) : 1*x\n[1,inf) : x\n"), ParseError);
  try {
    parse_piecewise("(-inf,0) : 1*x\n[0,inf) : zz\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_piecewise("(-inf,0) : 1*x + 5\n[0,inf) : 1*x\n"), ParseError);
}

TEST_CASE("canonical form merges equal formulas") {
  auto f = parse_piecewise("(-inf,0] : x\n(0,1) : x\n[1,1] : 1\n(1,inf) : x\n");
  CHECK(f == PiecewiseEndo::identity());
  auto g = parse_piecewise("(-inf,0] : 0\n(0,inf) : x\n");
  auto h = parse_piecewise("(-inf,0) : 0\n[0,inf) : x\n");
  CHECK(g == h);
  CHECK(g.pieces().size() == 2);
}

TEST_CASE("classify examples") {
  auto c = classify(jump_map());
  CHECK(c.injective);
  CHECK_FALSE(c.surjective);
  CHECK(jump_map().image().complement() == IntervalUnion({RatInterval(0, true, 1, false)}));
  CHECK(classify(PiecewiseEndo::identity()).automorphism());
  auto p = classify(plateau_map());
  CHECK(p.surjective);
  CHECK_FALSE(p.injective);
  auto k = classify(PiecewiseEndo::constant(3));
  CHECK(k.constant);
  CHECK_FALSE(k.injective);
  CHECK_FALSE(k.surjective);
}

TEST_CASE("classify agrees with sampling oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto kind = static_cast<MapKind>(i % 5);
    auto f = random_piecewise(rng, kind);
    CAPTURE(to_string(f));
    CHECK(classify(f) == oracle(f));
  }
}

TEST_CASE("composition is exact") {
  std::mt19937_64 rng(5);
  auto xs = samples(200);
  for (int i = 0; i < 100; ++i) {
    auto f = random_piecewise(rng, MapKind::any);
    auto g = random_piecewise(rng, MapKind::any);
    auto h = random_piecewise(rng, MapKind::any);
    auto fg = compose(f, g);
    for (const auto& x : xs) CHECK(fg(x) == f(g(x)));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(PiecewiseEndo::identity(), f) == f);
  }
}

TEST_CASE("cancellability witnesses") {
  auto w = cancellability_witness(plateau_map());
  REQUIRE(w.left);
  CHECK(w.left->x == 0);
  CHECK(w.left->y == make_rat(1, 2));
  CHECK_FALSE(w.right);

  auto r = cancellability_witness(jump_map());
  CHECK_FALSE(r.left);
  REQUIRE(r.right);
  CHECK(r.right->missing == make_rat(1, 2));
  CHECK(compose(r.right->g, jump_map()) == compose(r.right->h, jump_map()));
  CHECK_FALSE(r.right->g == r.right->h);
  for (const auto& x : samples(200))
    if (x != make_rat(1, 2)) CHECK(r.right->g(x) == r.right->h(x));

  CHECK(cancellability_witness(PiecewiseEndo::identity()).none());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_piecewise(rng, static_cast<MapKind>(i % 5));
    auto c = classify(f);
    auto wi = cancellability_witness(f);
    CHECK(c.injective == !wi.left);
    CHECK(c.surjective == !wi.right);
    if (wi.left) {
      CHECK(wi.left->x != wi.left->y);
      CHECK(f(wi.left->x) == f(wi.left->y));
    }
    if (wi.right) {
      CHECK_FALSE(f.image().contains(wi.right->missing));
      CHECK(compose(wi.right->g, f) == compose(wi.right->h, f));
    }
  }
}

TEST_CASE("right inverse") {
  auto h = right_inverse(plateau_map());
  CHECK(h == parse_piecewise("(-inf,0) : x\n[0,inf) : x + 1\n"));
  CHECK(plateau_map()(h(0)) == 0);
  CHECK(right_inverse(PiecewiseEndo::identity(), {1, 2}) == PiecewiseEndo::identity());
  CHECK(right_inverse(PiecewiseEndo::affine(2, 0)) == PiecewiseEndo::affine(make_rat(1, 2), 0));
  CHECK_THROWS_AS(right_inverse(jump_map()), std::invalid_argument);

  auto fixed = right_inverse(plateau_map(), {make_rat(1, 3)});
  CHECK(fixed(0) == make_rat(1, 3));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto g = random_piecewise(rng, MapKind::surjective);
    std::set<Rat> fix{random_rat(rng), random_rat(rng)};
    auto r = right_inverse(g, fix);
    CAPTURE(to_string(g));
    CHECK(compose(g, r) == PiecewiseEndo::identity());
    CHECK(classify(r).injective);
    if (fix.size() == 2 && g(*fix.begin()) != g(*fix.rbegin()))
      for (const auto& x : fix) CHECK(r(g(x)) == x);
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotent_with_image({0}) == PiecewiseEndo::constant(0));
  auto h = idempotent_with_image({0, 1});
  CHECK(h == parse_piecewise("(-inf,1/2] : 0\n(1/2,inf) : 1\n"));
  CHECK(compose(h, h) == h);
  auto t = idempotent_with_image({-1, 0, 1});
  CHECK(compose(t, t) == t);
  CHECK(t.image() == IntervalUnion({RatInterval::point(-1), RatInterval::point(0), RatInterval::point(1)}));
  for (int x : {-1, 0, 1}) CHECK(t(x) == x);
  CHECK_THROWS_AS(idempotent_with_image({}), std::invalid_argument);
}

TEST_CASE("epi-mono factorization") {
  auto xs = samples(300);
  for (const auto& h : {PiecewiseEndo::identity(), PiecewiseEndo::constant(0), plateau_map(), jump_map()}) {
    auto fac = epi_mono_factorize(h);
    std::map<Rat, Rat> fx;
    for (const auto& x : xs) {
      fx[x] = fac.f(x);
      CHECK(fac.g(fx[x]) == h(x));
    }
    Rat prev;
    bool first = true;
    for (const auto& [x, y] : fx) {
      if (!first) CHECK(prev < y);
      prev = y;
      first = false;
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rat r = enumerate(i);
      CHECK(fac.g(fac.g_preimage(r)) == r);
    }
    CHECK(fac.theta->consistent());
  }
}

TEST_CASE("image membership") {
  auto m = image_membership(plateau_map(), 0);
  CHECK(m.member);
  CHECK(m.witness == Rat(0));
  CHECK_FALSE(image_membership(jump_map(), make_rat(1, 2)).member);
  auto c = image_membership(PiecewiseEndo::constant(3), 3);
  REQUIRE(c.witness);
  CHECK(PiecewiseEndo::constant(3)(*c.witness) == 3);
}

TEST_CASE("division") {
  auto same = divide(jump_map(), jump_map());
  REQUIRE(same.h);
  CHECK(*same.h == PiecewiseEndo::identity());
  auto d = divide(PiecewiseEndo::affine(1, 2), PiecewiseEndo::affine(1, 1));
  REQUIRE(d.h);
  CHECK(*d.h == PiecewiseEndo::affine(1, 1));
  auto w = divide(PiecewiseEndo::identity(), jump_map());
  CHECK_FALSE(w.h);
  CHECK(w.witness == make_rat(1, 2));
  CHECK_THROWS_AS(divide(plateau_map(), jump_map()), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto g = random_piecewise(rng, MapKind::injective);
    auto k = random_piecewise(rng, MapKind::injective);
    auto f = compose(g, k);
    auto q = divide(f, g);
    REQUIRE(q.h);
    CHECK(compose(g, *q.h) == f);
    CHECK(classify(*q.h).injective);
  }
}

TEST_CASE("co-point embedding") {
  auto e = copoint_embedding(0);
  auto xs = samples(500);
  std::map<Rat, Rat> vals;
  for (const auto& x : xs) {
    vals[x] = e.map(x);
    CHECK(vals[x] != 0);
  }
  Rat prev;
  bool first = true;
  for (const auto& [x, y] : vals) {
    if (!first) CHECK(prev < y);
    prev = y;
    first = false;
  }
  for (std::uint64_t i = 1; i <= 100; ++i) {
    Rat r = enumerate(i);
    CHECK(e.map(e.preimage(r)) == r);
  }
}
