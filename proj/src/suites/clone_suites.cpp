#include "internal.hpp"

#include "dlo/clone.hpp"
#include "dlo/enumeration.hpp"
#include "dlo/gamma.hpp"
#include "dlo/random_maps.hpp"
#include "dlo/topology.hpp"

namespace dlo::suites {

namespace {

std::vector<Rat> grid_of(std::size_t n) {
  std::vector<Rat> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(Rat(static_cast<long>(i)));
  return g;
}

// The literal quadruple search, affordable on small tables.
bool quadruple_search(const GridOp& op) {
  std::size_t n = op.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (op.table()[a] == op.table()[b]) continue;
      auto x = op.row(a), y = op.row(b);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (op.table()[c] == op.table()[d]) continue;
          auto z = op.row(c), u = op.row(d);
          bool in_rho = true;
          for (std::size_t i = 0; i < x.size() && in_rho; ++i) in_rho = x[i] == y[i] || z[i] == u[i];
          if (in_rho) return false;
        }
    }
  return true;
}

std::size_t moved_positions(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

FinitaryOp random_unary_op(std::mt19937_64& rng, std::size_t arity) {
  std::size_t j = 1 + rng() % arity;
  if (rng() % 3 == 0) return FinitaryOp::projection(arity, j);
  return FinitaryOp::composed(random_piecewise(rng, MapKind::any, 3, 3), arity, j);
}

}  // namespace

SuiteReport clone(const RunConfig& cfg) {
  SuiteReport r{"clone", {}};
  auto rng = rng_for(cfg, "clone");

  auto& charac = add(r, "rho-iff-essentially-unary", 10);
  auto& recon = add(r, "reconstruction-as-composed", 10);
  auto& witness = add(r, "rho-witness-shape", 0);
  auto& brute = add(r, "rho-matches-quadruple-search", 0);
  std::size_t random_ops = 0, preserving = 0;
  for (std::size_t size = 1; size <= 4; ++size)
    for (std::size_t arity = 1; arity <= 3; ++arity) {
      auto grid = grid_of(size);
      std::vector<GridOp> ops;
      for (std::size_t j = 1; j <= arity; ++j) ops.push_back(GridOp::of(FinitaryOp::projection(arity, j), grid));
      for (const auto& c : grid) ops.push_back(GridOp::of(FinitaryOp::composed(PiecewiseEndo::constant(c), arity, 1), grid));
      for (int k = 0; k < 42; ++k, ++random_ops) ops.push_back(random_grid_op(rng, grid, arity));
      for (const auto& op : ops) {
        auto what = [&] { return to_string(op); };
        auto res = preserves_rho(op);
        auto rec = reconstruct_unary(op);
        charac.check(res.preserves == rec.has_value() && (!res.preserves || essential_positions(op).size() <= 1), what);
        if (op.rows() <= 16) brute.check(res.preserves == quadruple_search(op), what);
        if (rec) {
          ++preserving;
          auto table = GridOp::tabulate(grid, arity, [&](const std::vector<Rat>& x) { return rec->unary.at(x[rec->position - 1]); });
          recon.check(table == op, what);
        }
        if (res.witness) {
          const auto& w = *res.witness;
          witness.check(w.i < w.j && op(w.a) != op(w.a_moved) && op(w.b) != op(w.b_moved) &&
                            moved_positions(w.a, w.a_moved) == 1 && w.a[w.i - 1] != w.a_moved[w.i - 1] &&
                            moved_positions(w.b, w.b_moved) == 1 && w.b[w.j - 1] != w.b_moved[w.j - 1],
                        what);
        }
      }
    }
  charac.note = std::to_string(random_ops) + " random tables plus projections and constants; " +
                std::to_string(preserving) + " preserve rho";

  auto& closure = add(r, "compositions-stay-essentially-unary", 0);
  auto& proj = add(r, "projection-law", 0);
  auto grid = grid_of(4);
  UltraMetricContext ctx3(3);
  for (int n = 0; n < 1000; ++n) {
    std::size_t a = 1 + rng() % 3, k = 1 + rng() % 3;
    auto f = random_unary_op(rng, a);
    std::vector<FinitaryOp> gs;
    for (std::size_t i = 0; i < a; ++i) gs.push_back(random_unary_op(rng, k));
    auto c = clone_compose(f, gs);
    auto op = GridOp::of(c, grid);
    closure.check(preserves_rho(op).preserves, [&] { return c.describe(); });
    closure.check(op == GridOp::tabulate(grid, k, [&](const std::vector<Rat>& x) {
                    std::vector<Rat> inner;
                    for (const auto& g : gs) inner.push_back(g(x));
                    return f(inner);
                  }),
                  [&] { return c.describe() + " differs from pointwise composition"; });
    if (n < 100) {
      std::size_t j = 1 + rng() % a;
      auto pj = clone_compose(FinitaryOp::projection(a, j), gs);
      UltraMetricContext ctx(k);
      for (int s = 0; s < 20; ++s) {
        auto x = ctx.tuple(Int(s));
        proj.check(pj(x) == gs[j - 1](x), [&] { return pj.describe(); });
      }
    }
  }

  auto& ident = add(r, "finite-image-composition-identity", 0);
  for (int n = 0; n < 40; ++n) {
    auto f = random_grid_op(rng, grid, 2);
    std::vector<PiecewiseEndo> hs;
    for (int i = 0; i < 2; ++i) {
      Rat lo = grid[rng() % 4], hi = grid[rng() % 4];
      if (hi < lo) std::swap(lo, hi);
      Rat cut = random_rat(rng, 3);
      hs.push_back(PiecewiseEndo({Piece{RatInterval(ExtRat::neg_inf(), false, ExtRat(cut), true), 0, lo},
                                  Piece{RatInterval(ExtRat(cut), false, ExtRat::pos_inf(), false), 0, hi}}));
    }
    auto in_product = [&](const std::vector<Rat>& x) {
      for (std::size_t i = 0; i < 2; ++i)
        if (x[i] != hs[i](Rat(-100)) && x[i] != hs[i](Rat(100))) return false;
      return true;
    };
    auto off = GridOp::tabulate(grid, 2, [&](const std::vector<Rat>& x) { return in_product(x) ? f(x) : f(x) + 7; });
    auto on = GridOp::tabulate(grid, 2, [&](const std::vector<Rat>& x) { return in_product(x) ? f(x) + 1 : f(x); });
    ident.check(tuple_compose_identity(f, f, hs) == IdentityOutcome::holds, [&] { return to_string(f); });
    ident.check(tuple_compose_identity(f, off, hs) == IdentityOutcome::holds, [&] { return to_string(f); });
    ident.check(tuple_compose_identity(f, on, hs) == IdentityOutcome::hypothesis_false, [&] { return to_string(f); });
  }
  return r;
}

SuiteReport topology(const RunConfig& cfg) {
  SuiteReport r{"topology", {}};
  auto rng = rng_for(cfg, "topology");

  auto& ultra = add(r, "ultrametric-inequality", 11);
  for (int n = 0; n < 500; ++n) {
    auto base = random_piecewise(rng, MapKind::any, 3, 3);
    auto f = compose(base, random_piecewise(rng, MapKind::automorphism, 2, 3));
    auto g = n % 3 ? base : random_piecewise(rng, MapKind::any, 3, 3);
    auto h = compose(random_piecewise(rng, MapKind::automorphism, 2, 3), base);
    Distance fg = dist(f, g), gh = dist(g, h), fh = dist(f, h);
    ultra.check(at_most(fh, at_most(fg, gh) ? gh : fg), [&] {
      return fh.to_string() + " > max(" + fg.to_string() + ", " + gh.to_string() + ")";
    });
  }

  auto& lift = add(r, "lifted-moduli-improve", 11);
  auto& shifted = add(r, "non-convergent-shift-rejected", 0);
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (int n = 0; n < 10; ++n) {
    auto f = random_piecewise(rng, MapKind::any, 4, 4);
    auto [j, k] = shapes[n % 5];
    auto rep = lift_convergence([&](std::size_t i) { return compose(f, perturbation_at(i)); }, f, j, k, 9, cfg.depth);
    std::string what = to_string(f) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
    lift.check(rep.hypothesis && rep.bounds_hold, [&] { return what; });
    for (std::size_t i = 1; i < rep.modulus.size(); ++i)
      lift.check(rep.modulus[i] > rep.modulus[i - 1], [&] { return what + " at n=" + std::to_string(i); });
    auto bad = lift_convergence([&](std::size_t i) { return compose(PiecewiseEndo::affine(1, Rat(1, i + 1)), f); }, f, j,
                                k, 5, cfg.depth);
    shifted.check(!bad.hypothesis, [&] { return what; });
  }

  auto& density = add(r, "density-witnesses", 11);
  for (int n = 0; n < 20; ++n) {
    GeneralEndo e = n < 18 ? GeneralEndo(random_piecewise(rng, MapKind::injective, 4, 5))
                           : gamma_generic(n == 18 ? Variant::core : Variant::pm).g;
    for (std::size_t m = 0; m <= 10; ++m) {
      auto a = automorphism_approximant(e, m);
      Distance d = dist(a.map, e, cfg.depth);
      density.check(within(d, Int(m)) && a.iso->consistent(),
                    [&] { return e.describe() + " n=" + std::to_string(m) + ": " + d.to_string(cfg.depth); });
    }
  }

  auto& conv = add(r, "convergence-tables", 0);
  auto g = gamma_generic(Variant::core).g;
  auto t = check_convergence([&](std::size_t n) { return automorphism_approximant(g, n).map; }, g, 10, cfg.depth);
  for (std::size_t n = 0; n < t.dists.size(); ++n)
    conv.check(within(t.dists[n], Int(n + 1)), [&] { return "approximant " + std::to_string(n); });
  auto c = check_convergence([](std::size_t n) { return GeneralEndo(PiecewiseEndo::constant(long(n))); },
                             PiecewiseEndo::constant(0), 6, cfg.depth);
  for (std::size_t n = 1; n < c.dists.size(); ++n)
    conv.check(c.dists[n].index == Int(0), [&] { return "constant " + std::to_string(n); });
  return r;
}

}  // namespace dlo::suites
