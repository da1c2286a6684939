#include "internal.hpp"

#include "dlo/enumeration.hpp"
#include "dlo/gamma.hpp"
#include "dlo/random_maps.hpp"

#include <set>

namespace dlo::suites {

namespace {

// Colour straight from the reduced fraction.
bool is_red(const Rat& x) {
  Int p = abs(x.get_num()), q = x.get_den();
  return (p + q) % 2 != 0;
}

bool is_blue(const Rat& x) { return x.get_num() % 2 != 0 && x.get_den() % 2 != 0; }

std::string show(const Rat& x) { return to_string(x); }

// Nonempty, no least or greatest element, and no two members adjacent: two
// neighbouring components may not both be closed where they face each other.
bool dense_without_ends(const IntervalUnion& a) {
  const auto& cs = a.components();
  if (cs.empty()) return false;
  if (cs.front().lower_closed() || cs.back().upper_closed()) return false;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    if (cs[i].upper_closed() && cs[i + 1].lower_closed()) return false;
  return true;
}

}  // namespace

SuiteReport ratcore(const RunConfig& cfg) {
  SuiteReport r{"ratcore", {}};
  auto rng = rng_for(cfg, "ratcore");

  std::vector<Rat> head;
  for (std::uint64_t i = 0; i < 200; ++i) head.push_back(enumerate(i));
  auto& dense = add(r, "colour-density", 1);
  for (std::size_t i = 0; i < head.size(); ++i)
    for (std::size_t j = 0; j < head.size(); ++j) {
      const Rat &x = head[i], &y = head[j];
      if (!(x < y)) continue;
      auto range = RatInterval::open(ExtRat(x), ExtRat(y));
      auto red = least_where(range, [](const Rat& z) { return colour(z) == Colour::red; });
      auto blue = least_where(range, [](const Rat& z) { return colour(z) == Colour::blue; });
      dense.check(red && x < *red && *red < y && is_red(*red) && !is_blue(*red),
                  [&] { return "no red point between " + show(x) + " and " + show(y); });
      dense.check(blue && x < *blue && *blue < y && is_blue(*blue) && !is_red(*blue),
                  [&] { return "no blue point between " + show(x) + " and " + show(y); });
    }

  auto& bij = add(r, "enumeration-injective-and-inverted", 0);
  std::set<Rat> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rat x = enumerate(i);
    bij.check(seen.insert(x).second && enum_index(x) == i, [&] { return "index " + std::to_string(i); });
  }

  auto& cover = add(r, "enumeration-covers-small-fractions", 0);
  for (long p = -12; p <= 12; ++p)
    for (long q = 1; q <= 12; ++q) {
      Rat x = make_rat(p, q);
      cover.check(enum_index(x) < Int(1) << 13 && enumerate(enum_index(x)) == x, [&] { return show(x); });
    }

  auto& round = add(r, "interval-text-round-trip", 0);
  for (int n = 0; n < 500; ++n) {
    Rat a = random_rat(rng), b = random_rat(rng);
    if (b < a) std::swap(a, b);
    bool lc = rng() % 2, uc = rng() % 2;
    if (a == b) lc = uc = true;
    ExtRat lo = rng() % 5 == 0 ? ExtRat::neg_inf() : ExtRat(a);
    ExtRat hi = rng() % 5 == 0 ? ExtRat::pos_inf() : ExtRat(b);
    RatInterval i(lo, lo.is_finite() && lc, hi, hi.is_finite() && uc);
    round.check(parse_interval(to_string(i)) == i, [&] { return to_string(i); });
  }
  return r;
}

SuiteReport sim(const RunConfig& cfg) {
  SuiteReport r{"sim", {}};
  auto rng = rng_for(cfg, "sim");
  std::vector<IntervalUnion> corpus = {
      IntervalUnion::all(),
      IntervalUnion({RatInterval::open(ExtRat::neg_inf(), ExtRat(Rat(0))), RatInterval(ExtRat(Rat(1)), true, ExtRat::pos_inf(), false)}),
      IntervalUnion({RatInterval::open(ExtRat(Rat(0)), ExtRat(Rat(1)))}),
      IntervalUnion({RatInterval::open(ExtRat::neg_inf(), ExtRat(Rat(0))), RatInterval::point(1),
                     RatInterval::open(ExtRat(Rat(2)), ExtRat::pos_inf())}),
      IntervalUnion({RatInterval(ExtRat(Rat(-1)), false, ExtRat(Rat(0)), true), RatInterval::open(ExtRat(Rat(0)), ExtRat(Rat(1)))}),
  };
  while (corpus.size() < 24) corpus.push_back(random_piecewise(rng, MapKind::injective, 5, 4).image());

  auto& valid = add(r, "corpus-sets-order-isomorphic-to-Q", 2);
  for (const auto& a : corpus) valid.check(dense_without_ends(a), [&] { return to_string(a); });

  auto& refl = add(r, "sim-reflexive", 2);
  auto& sym = add(r, "sim-symmetric", 2);
  auto& trans = add(r, "sim-transitive", 2);
  auto& conv = add(r, "sim-classes-convex", 0);
  std::size_t related = 0;
  for (const auto& a : corpus) {
    ImageSpec spec = a;
    for (int k = 0; k < 200; ++k) {
      Rat x = random_rat(rng, 5), y = random_rat(rng, 5), z = random_rat(rng, 5);
      if (k % 2) {
        // Local triples, so that chained relations actually occur.
        y = x + random_rat(rng, 4) / 3;
        z = y + random_rat(rng, 4) / 3;
      }
      auto where = [&] { return to_string(a) + " at " + show(x) + ", " + show(y) + ", " + show(z); };
      bool xy = sim_related(spec, x, y), yz = sim_related(spec, y, z);
      refl.check(sim_related(spec, x, x), where);
      sym.check(xy == sim_related(spec, y, x), where);
      if (xy && yz) {
        ++related;
        trans.check(sim_related(spec, x, z), where);
      }
      Rat lo = std::min(x, y), hi = std::max(x, y);
      if (xy && lo < z && z < hi) conv.check(sim_related(spec, lo, z) && sim_related(spec, z, hi), where);
    }
  }
  trans.note = std::to_string(corpus.size()) + " images, " + std::to_string(related) + " chained triples";
  return r;
}

}  // namespace dlo::suites
