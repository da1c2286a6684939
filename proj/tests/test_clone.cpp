#include "doctest.h"

#include "dlo/clone.hpp"
#include "dlo/enumeration.hpp"
#include "dlo/random_maps.hpp"

using namespace dlo;

namespace {

std::vector<Rat> grid_of(std::size_t n) {
  std::vector<Rat> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(Rat(static_cast<long>(i)));
  return g;
}

// Direct search over every quadruple of argument tuples.
bool brute_preserves_rho(const GridOp& op) {
  std::size_t n = op.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (op.table()[a] == op.table()[b]) continue;
      auto x = op.row(a), y = op.row(b);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (op.table()[c] == op.table()[d]) continue;
          auto z = op.row(c), u = op.row(d);
          bool columns_in_rho = true;
          for (std::size_t i = 0; i < x.size() && columns_in_rho; ++i) columns_in_rho = x[i] == y[i] || z[i] == u[i];
          if (columns_in_rho) return false;
        }
    }
  return true;
}

GridOp binary_min() {
  return GridOp::tabulate(grid_of(2), 2, [](const std::vector<Rat>& x) { return std::min(x[0], x[1]); });
}

}  // namespace

TEST_CASE("clone_compose examples") {
  std::mt19937_64 rng(3);
  auto g1 = FinitaryOp::composed(random_piecewise(rng, MapKind::any), 3, 2);
  auto g2 = FinitaryOp::projection(3, 1);
  auto r = clone_compose(FinitaryOp::projection(2, 1), {g1, g2});
  CHECK(r.position() == 2);
  CHECK(*r.unary()->piecewise() == *g1.unary()->piecewise());

  PiecewiseEndo u = PiecewiseEndo::affine(2, 1), v = parse_piecewise("(-inf,0) : 0*x\n[0,inf) : 1*x\n");
  auto c = clone_compose(FinitaryOp::composed(u, 1, 1), {FinitaryOp::composed(v, 3, 2)});
  CHECK(c.arity() == 3);
  CHECK(c.position() == 2);
  UltraMetricContext ctx(3);
  for (int i = 0; i < 100; ++i) {
    auto x = ctx.tuple(Int(i));
    CHECK(c(x) == u(v(x[1])));
  }
  auto p = clone_compose(FinitaryOp::composed(PiecewiseEndo::identity(), 1, 1), {FinitaryOp::projection(2, 2)});
  CHECK(p(std::vector<Rat>{Rat(3), Rat(4)}) == 4);
  CHECK_THROWS_AS(clone_compose(FinitaryOp::projection(2, 1), {g1}), std::invalid_argument);
  CHECK_THROWS_AS(clone_compose(FinitaryOp::projection(2, 1), {g1, FinitaryOp::projection(2, 1)}), std::invalid_argument);
}

TEST_CASE("preserves_rho and essential positions examples") {
  for (std::size_t j = 1; j <= 3; ++j) {
    auto op = GridOp::of(FinitaryOp::projection(3, j), grid_of(2));
    CHECK(preserves_rho(op).preserves);
    CHECK(essential_positions(op) == std::set<std::size_t>{j});
  }
  auto m = preserves_rho(binary_min());
  REQUIRE_FALSE(m.preserves);
  REQUIRE(m.witness);
  const auto& w = *m.witness;
  auto op = binary_min();
  CHECK(op(w.a) != op(w.a_moved));
  CHECK(op(w.b) != op(w.b_moved));
  CHECK(essential_positions(op) == std::set<std::size_t>{1, 2});
  CHECK(preserves_rho(GridOp::of(FinitaryOp::composed(PiecewiseEndo::affine(1, 1), 2, 1), grid_of(3))).preserves);
  CHECK(essential_positions(GridOp(grid_of(2), 2, std::vector<Rat>(4, Rat(7)))).empty());
}

TEST_CASE("grid characterization against brute force") {
  std::mt19937_64 rng(17);
  std::size_t agree = 0, preserving = 0;
  for (std::size_t size = 1; size <= 3; ++size)
    for (std::size_t arity = 1; arity <= 2; ++arity)
      for (int t = 0; t < 40; ++t) {
        auto op = random_grid_op(rng, grid_of(size), arity);
        auto r = preserves_rho(op);
        CHECK(r.preserves == brute_preserves_rho(op));
        auto rec = reconstruct_unary(op);
        CHECK(r.preserves == rec.has_value());
        if (r.preserves) {
          ++preserving;
          CHECK(essential_positions(op).size() <= 1);
        }
        ++agree;
      }
  CHECK(agree == 240);
  CHECK(preserving > 40);
}

TEST_CASE("grid op text round trip") {
  auto op = binary_min();
  CHECK(parse_grid_op(to_string(op)) == op);
  CHECK_THROWS_AS(parse_grid_op("grid: 0 1\n0 0 : 0\n"), ParseError);
  CHECK_THROWS_AS(parse_grid_op("0 0 : 0\n"), ParseError);
  CHECK_THROWS_AS(parse_grid_op("grid: 0 1\n0 2 : 0\n"), ParseError);
}

TEST_CASE("compositions of essentially unary operations preserve rho") {
  std::mt19937_64 rng(23);
  auto grid = grid_of(4);
  for (int t = 0; t < 200; ++t) {
    auto unary_op = [&](std::size_t arity) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(1, arity)(rng);
      if (rng() % 3 == 0) return FinitaryOp::projection(arity, j);
      return FinitaryOp::composed(random_piecewise(rng, MapKind::any, 3, 3), arity, j);
    };
    std::size_t n = 1 + rng() % 3, k = 1 + rng() % 3;
    auto f = unary_op(n);
    std::vector<FinitaryOp> gs;
    for (std::size_t i = 0; i < n; ++i) gs.push_back(unary_op(k));
    auto c = clone_compose(f, gs);
    auto op = GridOp::of(c, grid);
    CHECK(preserves_rho(op).preserves);
    CHECK(op == GridOp::tabulate(grid, k, [&](const std::vector<Rat>& x) {
            std::vector<Rat> inner;
            for (const auto& g : gs) inner.push_back(g(x));
            return f(inner);
          }));
  }
}

TEST_CASE("tuple_compose_identity") {
  auto grid = grid_of(4);
  auto f = GridOp::tabulate(grid, 2, [](const std::vector<Rat>& x) { return x[0] + x[1]; });
  PiecewiseEndo h1 = parse_piecewise("(-inf,0] : 0*x + 1\n(0,inf) : 0*x + 2\n");
  PiecewiseEndo h2 = PiecewiseEndo::constant(3);
  CHECK(tuple_compose_identity(f, f, {h1, h2}) == IdentityOutcome::holds);
  // Perturb f off the product {1,2} x {3}.
  auto table = f.table();
  for (std::size_t r = 0; r < f.rows(); ++r)
    if (f.row(r)[1] != 3) table[r] += 10;
  GridOp f2(grid, 2, table);
  CHECK(f2 != f);
  CHECK(tuple_compose_identity(f, f2, {h1, h2}) == IdentityOutcome::holds);
  GridOp f3 = GridOp::tabulate(grid, 2, [&](const std::vector<Rat>& x) { return x == std::vector<Rat>{Rat(1), Rat(3)} ? Rat(0) : f(x); });
  CHECK(tuple_compose_identity(f, f3, {h1, h2}) == IdentityOutcome::hypothesis_false);
  CHECK_THROWS_AS(tuple_compose_identity(f, f, {h1, PiecewiseEndo::constant(9)}), std::invalid_argument);
  CHECK_THROWS_AS(tuple_compose_identity(f, f, {h1, PiecewiseEndo::identity()}), std::invalid_argument);
}

TEST_CASE("lift_convergence") {
  PiecewiseEndo f = parse_piecewise("(-inf,0) : 1*x\n[0,inf) : 1*x + 1\n");
  auto same = lift_convergence([&](std::size_t) { return f; }, f, 2, 3, 8);
  CHECK(same.hypothesis);
  CHECK(same.bounds_hold);
  for (const auto& d : same.lifted) CHECK(d.zero());

  for (std::size_t j = 1; j <= 3; ++j) {
    auto rep = lift_convergence([&](std::size_t n) { return compose(f, perturbation_at(n)); }, f, j, 3, 9);
    CHECK(rep.hypothesis);
    CHECK(rep.bounds_hold);
    for (std::size_t n = 0; n < rep.unary.size(); ++n) CHECK(rep.unary[n].index == Int(n));
    for (std::size_t n = 1; n < rep.modulus.size(); ++n) CHECK(rep.modulus[n] > rep.modulus[n - 1]);
  }
  auto shifted = lift_convergence([&](std::size_t n) { return compose(PiecewiseEndo::affine(1, Rat(1, n + 1)), f); }, f, 1, 2, 5);
  CHECK_FALSE(shifted.hypothesis);
}
