#pragma once

#include "dlo/general_endo.hpp"
#include "dlo/lazy_iso.hpp"
#include "dlo/rat.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dlo {

inline constexpr std::uint64_t kDefaultDepth = 2048;

std::pair<Int, Int> cantor_unpair(const Int& z);

// Enumeration of Q^k: index n unpairs into (i, rest) and gives
// (e(i), tuple(rest)); for k = 1 it is the enumeration of Q itself.
class UltraMetricContext {
 public:
  explicit UltraMetricContext(std::size_t arity = 1, std::uint64_t depth = kDefaultDepth);

  std::size_t arity() const { return arity_; }
  std::uint64_t depth() const { return depth_; }
  std::vector<Int> coordinates(const Int& n) const;
  std::vector<Rat> tuple(const Int& n) const;
  // Inverse of coordinates.
  Int index_of(const std::vector<Int>& coords) const;

 private:
  std::size_t arity_;
  std::uint64_t depth_;
};

// 2^-index, where index is the first enumerated argument on which two maps
// differ. No index means no difference: proven when exact, otherwise only
// up to the scanned depth.
struct Distance {
  std::optional<Int> index;
  bool exact = false;

  bool zero() const { return !index; }
  // "0", "0 (indistinguishable at depth N)", "1", "2^-5".
  std::string to_string(std::uint64_t depth = kDefaultDepth) const;
};

// a <= b as distances.
bool at_most(const Distance& a, const Distance& b);
// Distance <= 2^-m.
bool within(const Distance& d, const Int& m);

using KaryFn = std::function<Rat(const std::vector<Rat>&)>;

// Exact when both maps are piecewise, otherwise a scan of ctx.depth() points.
Distance dist(const GeneralEndo& f, const GeneralEndo& g, std::uint64_t depth = kDefaultDepth);
Distance dist_scan(const UltraMetricContext& ctx, const KaryFn& f, const KaryFn& g);
Distance dist_exact(const PiecewiseEndo& f, const PiecewiseEndo& g);

bool subbasic_contains(const Rat& q, const Rat& r, const GeneralEndo& f);

struct ConvergenceTable {
  std::vector<Distance> dists;  // dist(seq(n), limit) for n = 0..N
  // settled[m]: least n from which every listed distance is <= 2^-m.
  std::vector<std::optional<std::size_t>> settled;
};

ConvergenceTable check_convergence(const std::function<GeneralEndo(std::size_t)>& seq, const GeneralEndo& limit,
                                   std::size_t n, std::uint64_t depth = kDefaultDepth);

// Identity off (x - r, x + r); moves x to x + r.
PiecewiseEndo bump(const Rat& x, const Rat& r);
// A bump at e(n) whose support misses e(0..n-1): distance exactly 2^-n from
// the identity.
PiecewiseEndo perturbation_at(std::size_t n);

// Automorphism of Q agreeing with the strictly monotone map g on e(0..n).
struct Approximant {
  GeneralEndo map;
  std::shared_ptr<LazyIso> iso;
};

Approximant automorphism_approximant(const GeneralEndo& g, std::size_t n);

}  // namespace dlo
