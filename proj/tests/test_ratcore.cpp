#include <doctest.h>

#include "dlo/enumeration.hpp"
#include "dlo/interval.hpp"
#include "dlo/rat.hpp"

#include <random>
#include <set>

using namespace dlo;

namespace {

// Independent oracle: the Calkin-Wilf recurrence cw(k+1) = 1/(2 floor(cw(k)) - cw(k) + 1).
std::vector<Rat> cw_by_recurrence(std::size_t count) {
  std::vector<Rat> out{Rat(1)};
  while (out.size() < count) {
    const Rat& c = out.back();
    out.push_back(Rat(1 / (2 * Rat(floor_of(c)) - c + 1)));
  }
  return out;
}

// Least n with e(n) strictly inside (lo, hi), by scanning.
std::optional<Rat> scan_least(const Rat& lo, const Rat& hi, std::uint64_t limit) {
  for (std::uint64_t n = 0; n < limit; ++n) {
    Rat v = enumerate(n);
    if (lo < v && v < hi) return v;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("enumeration head values") {
  CHECK(enumerate(0) == 0);
  CHECK(enumerate(1) == 1);
  CHECK(enumerate(2) == -1);
  CHECK(enumerate(3) == make_rat(1, 2));
  CHECK(enumerate(5) == 2);
}

TEST_CASE("enumeration matches the Calkin-Wilf recurrence") {
  auto cw = cw_by_recurrence(5000);
  for (std::size_t k = 1; k <= cw.size(); ++k) {
    REQUIRE(enumerate(2 * k - 1) == cw[k - 1]);
    REQUIRE(enumerate(2 * k) == -cw[k - 1]);
  }
}

TEST_CASE("enumeration is injective and covers small fractions") {
  std::set<Rat> seen;
  for (std::uint64_t n = 0; n < 10000; ++n) REQUIRE(seen.insert(enumerate(n)).second);
  // A positive p/q sits at Calkin-Wilf depth equal to the sum of its
  // continued-fraction terms, so 10^4 terms cover depth 12 and part of depth 13. Heights up
  // to 20 need depth 20 (20/1 is at index 2^21 - 2).
  for (long p = -20; p <= 20; ++p)
    for (long q = 1; q <= 20; ++q) {
      Rat r = make_rat(p, q);
      long depth = 0;
      for (Int a = abs(r.get_num()), b = r.get_den(); b != 0;) {
        Int t = a / b;
        depth += t.get_si();
        a -= t * b;
        std::swap(a, b);
      }
      if (depth <= 12) CHECK(seen.count(r) == 1);
      if (depth >= 14) CHECK(seen.count(r) == 0);
      CHECK(enum_index(r) < Int(1L << 21));
    }
}

TEST_CASE("enum_index inverts enumerate") {
  for (std::uint64_t n = 0; n < 10000; ++n) REQUIRE(enum_index(enumerate(n)) == Int(static_cast<unsigned long>(n)));
  Int big("123456789012345678901234567890");
  CHECK(enum_index(enumerate(big)) == big);
  CHECK(calkin_wilf_index(make_rat(3, 2)) == 5);
  CHECK(calkin_wilf_index(make_rat(1, 5)) == 16);
}

TEST_CASE("colour rule") {
  CHECK(colour(Rat(0)) == Colour::red);
  CHECK(colour(Rat(1)) == Colour::blue);
  CHECK(colour(make_rat(1, 2)) == Colour::red);
  CHECK(colour(make_rat(-3, 5)) == Colour::blue);
  CHECK(colour(make_rat(2, 4)) == Colour::red);  // reduces to 1/2
}

TEST_CASE("interval membership") {
  CHECK(interval_contains(parse_interval("(0,1)"), make_rat(1, 2)));
  CHECK(interval_contains(parse_interval("[0,0]"), Rat(0)));
  CHECK_FALSE(interval_contains(parse_interval("(0,1)"), Rat(1)));
  CHECK(interval_contains(parse_interval("(-inf,+inf)"), Rat(-7)));
  CHECK_THROWS(parse_interval("[0,0)"));
  CHECK_THROWS(parse_interval("[-inf,0)"));
  CHECK(to_string(parse_interval("( -inf , 1/2 ]")) == "(-inf,1/2]");
}

TEST_CASE("serialization") {
  CHECK(to_string(make_rat(4, -6)) == "-2/3");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(parse_rat(" -2/3 ") == make_rat(-2, 3));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("interval unions") {
  IntervalUnion a({parse_interval("(-inf,0)"), parse_interval("[1,+inf)")});
  CHECK(to_string(a.complement()) == "[0,1)");
  IntervalUnion b({parse_interval("(0,1)"), parse_interval("[1,2]"), parse_interval("(2,3)")});
  CHECK(to_string(b) == "(0,3)");
  IntervalUnion c({parse_interval("(0,1)"), parse_interval("(1,2)")});
  CHECK(to_string(c.complement()) == "(-inf,0] u [1,1] u [2,+inf)");
  CHECK(c.count_between_capped(Rat(0), Rat(1)) == 2);
  IntervalUnion pts({RatInterval::point(Rat(1)), RatInterval::point(Rat(2))});
  CHECK(pts.count_between_capped(Rat(0), Rat(2)) == 1);
  CHECK(pts.count_between_capped(Rat(0), Rat(3)) == 2);
  CHECK(a.subset_of(IntervalUnion::all()));
  CHECK_FALSE(IntervalUnion::all().subset_of(a));
  CHECK(IntervalUnion::all().complement().empty());
}

TEST_CASE("simplest_between agrees with a scan of the enumeration") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    Rat a = make_rat(num(rng), den(rng));
    Rat b = make_rat(num(rng), den(rng));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    auto expected = scan_least(a, b, 200000);
    REQUIRE(expected);
    CHECK(simplest_between(a, b) == *expected);
  }
  CHECK(simplest_between(ExtRat::neg_inf(), ExtRat::pos_inf()) == 0);
  CHECK(simplest_between(Rat(0), make_rat(1, 3)) == make_rat(1, 4));
  CHECK(simplest_between(Rat(0), ExtRat::pos_inf()) == 1);
  CHECK(simplest_between(ExtRat::neg_inf(), Rat(-5)) == -6);
}

TEST_CASE("rational stream visits an interval in enumeration order") {
  RatInterval range = parse_interval("[1/3,2)");
  RationalStream stream(range);
  std::vector<Rat> expected;
  for (std::uint64_t n = 0; expected.size() < 200; ++n) {
    Rat v = enumerate(n);
    if (range.contains(v)) expected.push_back(v);
  }
  for (const auto& v : expected) {
    auto got = stream.next();
    REQUIRE(got);
    CHECK(got->second == v);
    CHECK(got->first == enum_index(v));
  }
  RationalStream single(RatInterval::point(Rat(4)));
  CHECK(single.next()->second == 4);
  CHECK_FALSE(single.next());
}

TEST_CASE("least_where with a colour predicate") {
  auto v = least_where(RatInterval::open(Rat(1), Rat(2)), [](const Rat& x) { return colour(x) == Colour::blue; });
  REQUIRE(v);
  CHECK(*v == make_rat(5, 3));  // 3/2 is red, 4/3 red, 5/3 blue
}

TEST_CASE("mediant witnesses exist for both colours") {
  for (std::uint64_t i = 0; i < 40; ++i)
    for (std::uint64_t j = 0; j < 40; ++j) {
      Rat x = enumerate(i), y = enumerate(j);
      if (!(x < y)) continue;
      for (Colour c : {Colour::red, Colour::blue}) {
        auto z = mediant_witness(x, y, c);
        REQUIRE(z);
        CHECK(x < *z);
        CHECK(*z < y);
        CHECK(colour(*z) == c);
      }
    }
}
