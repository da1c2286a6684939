#pragma once

#include "dlo/general_endo.hpp"
#include "dlo/lazy_iso.hpp"
#include "dlo/piecewise.hpp"

#include <memory>
#include <optional>
#include <set>

namespace dlo {

// f o c_x = f o c_y with x != y.
struct LeftWitness {
  Rat x;
  Rat y;
};

// g o f = h o f with g, h differing only at the missing point.
struct RightWitness {
  Rat missing;
  PiecewiseEndo g;
  PiecewiseEndo h;
};

struct CancellabilityWitness {
  std::optional<LeftWitness> left;
  std::optional<RightWitness> right;
  bool none() const { return !left && !right; }
};

CancellabilityWitness cancellability_witness(const PiecewiseEndo& f);

// Strictly monotone h with g o h = id; plateau sections prefer fixset points,
// then a closed right end, then a closed left end, then the least-index
// interior point. Throws std::invalid_argument unless g is surjective.
PiecewiseEndo right_inverse(const PiecewiseEndo& g, const std::set<Rat>& fixset = {});

// Retraction onto B, cut at midpoints with the lower piece closed.
PiecewiseEndo idempotent_with_image(const std::set<Rat>& b);

struct Factorization {
  GeneralEndo f;  // strictly monotone
  GeneralEndo g;  // surjective
  GeneralEndo::Fn g_preimage;
  std::shared_ptr<LazyIso> theta;
};

// h = g o f through an isomorphism of the rationals with the order of tagged
// image points.
Factorization epi_mono_factorize(const PiecewiseEndo& h);

struct Membership {
  bool member = false;
  std::optional<Rat> witness;  // f o c_witness = c_q
};

Membership image_membership(const PiecewiseEndo& f, const Rat& q);

struct Division {
  std::optional<PiecewiseEndo> h;  // g o h = f
  std::optional<Rat> witness;      // in im f but not in im g
};

// Both maps must be injective; throws std::invalid_argument otherwise.
Division divide(const PiecewiseEndo& f, const PiecewiseEndo& g);

struct LazyEmbedding {
  GeneralEndo map;
  GeneralEndo::Fn preimage;
  std::shared_ptr<LazyIso> iso;
};

// Strictly monotone embedding whose image is everything but y.
LazyEmbedding copoint_embedding(const Rat& y);

}  // namespace dlo
