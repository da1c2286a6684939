#include "internal.hpp"

#include "dlo/enumeration.hpp"
#include "dlo/gamma_build.hpp"
#include "dlo/ppair.hpp"
#include "dlo/random_maps.hpp"

#include <algorithm>
#include <set>

namespace dlo::suites {

namespace {

const Variant kVariants[] = {Variant::core, Variant::plus, Variant::minus, Variant::pm};

void record(Property& p, const CertCheck& c, const std::string& what) {
  p.checks += c.checks;
  p.failed += c.failures.size();
  for (const auto& f : c.failures)
    if (p.counterexamples.size() < 5) p.counterexamples.push_back(what + ": " + f);
}

// Interval union with open outer ends, bounded on the sides the variant asks for.
IntervalUnion random_bounded_image(std::mt19937_64& rng, Variant v) {
  std::set<Rat> cuts;
  std::size_t parts = 1 + rng() % 3;
  while (cuts.size() < 2 * parts) cuts.insert(random_rat(rng, 6));
  std::vector<Rat> c(cuts.begin(), cuts.end());
  std::vector<RatInterval> out;
  for (std::size_t i = 0; i < parts; ++i) {
    bool first = i == 0, last = i + 1 == parts;
    ExtRat lo = first && !has_bottom(v) ? ExtRat::neg_inf() : ExtRat(c[2 * i]);
    ExtRat hi = last && !has_top(v) ? ExtRat::pos_inf() : ExtRat(c[2 * i + 1]);
    bool lc = !first && rng() % 2, uc = !last && rng() % 2;
    out.emplace_back(lo, lc, hi, uc);
  }
  return IntervalUnion(out);
}

}  // namespace

SuiteReport gamma(const RunConfig& cfg) {
  SuiteReport r{"gamma", {}};
  auto rng = rng_for(cfg, "gamma");

  auto& generic = add(r, "generic-certificates", 3);
  for (Variant v : kVariants) {
    auto c = gamma_generic(v);
    generic.check(c.cert->variant() == v, [&] { return std::string("variant of ") + to_string(v); });
    record(generic, check_certificate(*c.cert, rng, 200, 100), to_string(v));
  }

  auto& absorbed = add(r, "absorbed-coterminal", 6);
  auto& composed = add(r, "composed-coterminal", 6);
  for (int n = 0; n < 20; ++n) {
    auto f = random_piecewise(rng, MapKind::injective, 4, 6);
    std::string what = to_string(f);
    auto ab = absorb(f);
    absorbed.check(ab.variant == Variant::core, [&] { return what + ": variant " + to_string(ab.variant); });
    for (std::uint64_t i = 0; i < 50; ++i) {
      Rat x = enumerate(i);
      absorbed.check(ab.gf(x) == ab.g(f(x)), [&] { return what + ": gf differs from g o f"; });
    }
    record(absorbed, check_certificate(*ab.gf_cert, rng, 200, 100), what + " (gf)");
    record(absorbed, check_certificate(*ab.g_cert, rng, 200, 100), what + " (g)");
    auto c = compose_certified(gamma_generic_cert(Variant::core), ab.gf_cert);
    record(composed, check_certificate(*c.cert, rng, 200, 100), what + " (composite)");
  }

  auto& bounded = add(r, "absorbed-bounded", 6);
  std::set<Variant> seen;
  for (int n = 0; n < 10; ++n) {
    Variant v = kVariants[1 + n % 3];
    auto a = random_bounded_image(rng, v);
    auto ab = absorb(embedding_onto(a));
    seen.insert(ab.variant);
    bounded.check(ab.variant == v, [&] { return to_string(a) + ": variant " + to_string(ab.variant); });
    record(bounded, check_certificate(*ab.gf_cert, rng, 200, 100), to_string(a));
    auto c = compose_certified(gamma_generic_cert(v), ab.gf_cert);
    record(composed, check_certificate(*c.cert, rng, 200, 100), to_string(a) + " (composite)");
  }
  bounded.note = "variants exercised: " + std::to_string(seen.size()) + " of 3";
  return r;
}

SuiteReport recover(const RunConfig& cfg) {
  SuiteReport r{"recover", {}};
  auto rng = rng_for(cfg, "recover");
  std::vector<CoordCertPtr> certs;
  for (Variant v : kVariants) certs.push_back(gamma_generic_cert(v));

  auto& ext = add(r, "extend-pair", 4);
  auto& transfer = add(r, "fixed-points-transfer", 5);
  std::vector<std::pair<CoordCertPtr, CommutingPair>> pairs;
  for (int n = 0; n < 50; ++n) {
    const auto& cert = certs[n % 4];
    PPair p = random_ppair(cert, rng);
    auto viol = p_check(*cert, p);
    ext.check(viol.empty(), [&] { return "random pair violates clause " + std::to_string(viol.front().clause); });
    if (!viol.empty()) continue;
    auto cp = extend_pair(cert, p);
    for (const auto& [x, y] : p.a) ext.check(cp.alpha(x) == y, [&] { return "alpha misses " + to_string(x); });
    for (const auto& [x, y] : p.b) ext.check(cp.beta(x) == y, [&] { return "beta misses " + to_string(x); });
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rat x = enumerate(i);
      ext.check(cp.alpha(cert->apply(x)) == cert->apply(cp.beta(x)),
                [&] { return "alpha g != g beta at " + to_string(x); });
      if (cp.beta(x) == x)
        transfer.check(cp.alpha(cert->apply(x)) == cert->apply(x), [&] { return "g(u) moved, u = " + to_string(x); });
    }
  }

  auto& rec = add(r, "recover-witness", 5);
  int recipes[4] = {0, 0, 0, 0};
  for (int n = 0, done = 0; done < 50; ++n) {
    const auto& cert = certs[n % 4];
    Rat u = random_rat(rng, 5);
    Rat s = n % 3 == 0 ? cert->apply(random_rat(rng, 5)) : cert->at(Elem{Rat(2 * (n % 7) + n % 3 % 2), random_rat(rng, 5)});
    if (s == cert->apply(u)) continue;
    ++done;
    auto w = recover_witness(cert, u, s);
    auto what = [&] { return "u = " + to_string(u) + ", s = " + to_string(s); };
    rec.check(!w.equal && w.witness.has_value(), what);
    if (!w.witness) continue;
    ++recipes[w.recipe];
    rec.check(p_check(*cert, w.pair).empty(), what);
    rec.check(w.witness->beta(u) == u, what);
    rec.check(w.witness->alpha(s) != s, what);
    transfer.check(w.witness->alpha(cert->apply(u)) == cert->apply(u), what);
  }
  rec.note = "image " + std::to_string(recipes[1]) + ", blue " + std::to_string(recipes[2]) + ", red " +
             std::to_string(recipes[3]);
  return r;
}

}  // namespace dlo::suites
