#include "internal.hpp"

#include "dlo/endo_ops.hpp"
#include "dlo/enumeration.hpp"
#include "dlo/random_maps.hpp"

#include <map>

namespace dlo::suites {

SuiteReport factor(const RunConfig& cfg) {
  SuiteReport r{"factor", {}};
  auto rng = rng_for(cfg, "factor");
  std::vector<Rat> head;
  for (std::uint64_t i = 0; i < std::max<std::size_t>(cfg.budget, 500); ++i) head.push_back(enumerate(i));

  auto& rinv = add(r, "right-inverse", 7);
  for (int n = 0; n < 20; ++n) {
    auto g = random_piecewise(rng, MapKind::surjective);
    auto h = right_inverse(g);
    for (std::size_t i = 0; i < 500; ++i)
      rinv.check(g(h(head[i])) == head[i], [&] { return to_string(g) + " at " + to_string(head[i]); });
  }

  auto& epi = add(r, "epi-mono-composite", 7);
  auto& mono = add(r, "epi-mono-f-strictly-monotone", 7);
  auto& pre = add(r, "epi-mono-g-preimage", 7);
  for (int n = 0; n < 50; ++n) {
    auto h = random_piecewise(rng, static_cast<MapKind>(n % 5));
    auto fac = epi_mono_factorize(h);
    std::string what = to_string(h);
    std::map<Rat, Rat> fx;
    for (std::size_t i = 0; i < cfg.budget; ++i) {
      fx[head[i]] = fac.f(head[i]);
      epi.check(fac.g(fx[head[i]]) == h(head[i]), [&] { return what + " at " + to_string(head[i]); });
    }
    const Rat* prev = nullptr;
    for (const auto& [x, y] : fx) {
      if (prev) mono.check(*prev < y, [&] { return what + " below " + to_string(x); });
      prev = &y;
    }
    for (std::size_t i = 0; i < 100; ++i)
      pre.check(fac.g(fac.g_preimage(head[i])) == head[i], [&] { return what + " target " + to_string(head[i]); });
    pre.check(fac.theta->consistent(), [&] { return what + ": inconsistent memo"; });
  }
  epi.note = "composite checked on " + std::to_string(cfg.budget) + " enumerated points per map";

  auto& wit = add(r, "classification-witnesses", 8);
  auto& zero = add(r, "constant-iff-left-zero", 8);
  for (int n = 0; n < 100; ++n) {
    auto f = random_piecewise(rng, static_cast<MapKind>(n % 5));
    std::string what = to_string(f);
    auto c = classify(f);
    auto w = cancellability_witness(f);
    wit.check(c.injective == !w.left, [&] { return what + ": injectivity vs left witness"; });
    wit.check(c.surjective == !w.right, [&] { return what + ": surjectivity vs right witness"; });
    if (w.left)
      wit.check(w.left->x != w.left->y && f(w.left->x) == f(w.left->y), [&] { return what + ": bad left witness"; });
    if (w.right)
      wit.check(!f.image().contains(w.right->missing) && w.right->g != w.right->h &&
                    compose(w.right->g, f) == compose(w.right->h, f),
                [&] { return what + ": bad right witness"; });
    // f is a left zero iff f o g = f for all g; probe constants and random maps.
    bool left_zero = true;
    for (int k = 0; k < 6 && left_zero; ++k) {
      PiecewiseEndo g = k < 2 ? PiecewiseEndo::constant(k) : random_piecewise(rng, MapKind::any);
      left_zero = compose(f, g) == f;
    }
    zero.check(c.constant == left_zero, [&] { return what + ": constant flag vs left-zero probe"; });
  }
  return r;
}

}  // namespace dlo::suites
