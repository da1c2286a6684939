#include "dlo/topology.hpp"

#include "dlo/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlo {

std::pair<Int, Int> cantor_unpair(const Int& z) {
  Int root;
  Int disc = 8 * z + 1;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Int s = (root - 1) / 2;
  Int b = z - s * (s + 1) / 2;
  return {s - b, b};
}

UltraMetricContext::UltraMetricContext(std::size_t arity, std::uint64_t depth) : arity_(arity), depth_(depth) {
  if (arity == 0) throw std::invalid_argument("arity must be at least 1");
}

std::vector<Int> UltraMetricContext::coordinates(const Int& n) const {
  std::vector<Int> out;
  Int rest = n;
  for (std::size_t i = 1; i < arity_; ++i) {
    auto [a, r] = cantor_unpair(rest);
    out.push_back(a);
    rest = r;
  }
  out.push_back(rest);
  return out;
}

std::vector<Rat> UltraMetricContext::tuple(const Int& n) const {
  std::vector<Rat> out;
  for (const auto& c : coordinates(n)) out.push_back(enumerate(c));
  return out;
}

Int UltraMetricContext::index_of(const std::vector<Int>& coords) const {
  if (coords.size() != arity_) throw std::invalid_argument("tuple of wrong arity");
  Int acc = coords.back();
  for (std::size_t i = arity_ - 1; i-- > 0;) acc = cantor_pair(coords[i], acc);
  return acc;
}

std::string Distance::to_string(std::uint64_t depth) const {
  if (!index) return exact ? "0" : "0 (indistinguishable at depth " + std::to_string(depth) + ")";
  if (*index == 0) return "1";
  return "2^-" + index->get_str();
}

bool at_most(const Distance& a, const Distance& b) {
  if (!a.index) return true;
  if (!b.index) return false;
  return *a.index >= *b.index;
}

bool within(const Distance& d, const Int& m) { return !d.index || *d.index >= m; }

Distance dist_scan(const UltraMetricContext& ctx, const KaryFn& f, const KaryFn& g) {
  for (std::uint64_t i = 0; i < ctx.depth(); ++i) {
    auto x = ctx.tuple(Int(i));
    if (f(x) != g(x)) return Distance{Int(i), true};
  }
  return Distance{std::nullopt, false};
}

namespace {

// Least enumeration index in the interval, skipping one excluded point.
std::optional<Int> least_index(const RatInterval& d, const std::optional<Rat>& skip) {
  RationalStream s(d);
  while (auto next = s.next()) {
    if (skip && next->second == *skip) continue;
    return next->first;
  }
  return std::nullopt;
}

}  // namespace

Distance dist_exact(const PiecewiseEndo& f, const PiecewiseEndo& g) {
  std::optional<Int> best;
  for (const auto& p : f.pieces()) {
    for (const auto& q : g.pieces()) {
      auto d = intersect(p.domain, q.domain);
      if (!d || (p.slope == q.slope && p.intercept == q.intercept)) continue;
      std::optional<Rat> agree;
      if (p.slope != q.slope) agree = Rat((q.intercept - p.intercept) / (p.slope - q.slope));
      auto idx = least_index(*d, agree);
      if (idx && (!best || *idx < *best)) best = idx;
    }
  }
  return Distance{best, true};
}

Distance dist(const GeneralEndo& f, const GeneralEndo& g, std::uint64_t depth) {
  if (f.piecewise() && g.piecewise()) return dist_exact(*f.piecewise(), *g.piecewise());
  UltraMetricContext ctx(1, depth);
  return dist_scan(ctx, [&](const std::vector<Rat>& x) { return f(x[0]); },
                   [&](const std::vector<Rat>& x) { return g(x[0]); });
}

bool subbasic_contains(const Rat& q, const Rat& r, const GeneralEndo& f) { return f(q) == r; }

ConvergenceTable check_convergence(const std::function<GeneralEndo(std::size_t)>& seq, const GeneralEndo& limit,
                                   std::size_t n, std::uint64_t depth) {
  ConvergenceTable t;
  for (std::size_t i = 0; i <= n; ++i) t.dists.push_back(dist(seq(i), limit, depth));
  std::uint64_t levels = 0;
  while ((std::uint64_t{1} << levels) < depth) ++levels;
  for (std::uint64_t m = 0; m <= levels; ++m) {
    std::optional<std::size_t> from;
    for (std::size_t i = t.dists.size(); i-- > 0 && within(t.dists[i], Int(m));) from = i;
    t.settled.push_back(from);
  }
  return t;
}

PiecewiseEndo bump(const Rat& x, const Rat& r) {
  if (r <= 0) throw std::invalid_argument("bump radius must be positive");
  return PiecewiseEndo({
      Piece{RatInterval(ExtRat::neg_inf(), false, ExtRat(Rat(x - r)), false), 1, 0},
      Piece{RatInterval::closed(x - r, x), 2, r - x},
      Piece{RatInterval(ExtRat(x), false, ExtRat(Rat(x + r)), false), 0, x + r},
      Piece{RatInterval(ExtRat(Rat(x + r)), true, ExtRat::pos_inf(), false), 1, 0},
  });
}

PiecewiseEndo perturbation_at(std::size_t n) {
  Rat x = enumerate(std::uint64_t(n));
  Rat r(1);
  for (std::uint64_t i = 0; i < n; ++i) r = std::min(r, Rat(abs(enumerate(i) - x) / 2));
  return bump(x, r);
}

Approximant automorphism_approximant(const GeneralEndo& g, std::size_t n) {
  std::vector<std::pair<Elem, Elem>> seed;
  for (std::uint64_t i = 0; i <= n; ++i) {
    Rat x = enumerate(i);
    seed.emplace_back(elem(x), elem(g(x)));
  }
  auto iso = std::make_shared<LazyIso>(full_q(), full_q(), seed, std::vector<ConstraintPtr>{},
                                       "approximant " + std::to_string(n) + " of " + g.describe());
  GeneralEndo map = GeneralEndo::lazy([iso](const Rat& x) { return iso->fwd(x); }, iso->name());
  return Approximant{std::move(map), std::move(iso)};
}

}  // namespace dlo
