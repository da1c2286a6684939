#pragma once

#include "dlo/gamma.hpp"
#include "dlo/piecewise.hpp"

#include <random>
#include <string>
#include <vector>

namespace dlo {

// g2 o g1 with a certificate indexed like cert1. The outer certificate must
// be a fresh-enough coordinate one: blue classes of g2 landing between
// classes of g1 are steered into a single g1 class by committing more of its
// psi. Throws std::invalid_argument on a variant mismatch.
Certified compose_certified(const CoordCertPtr& cert2, const CertPtr& cert1);

// An embedding together with its image and inverse on that image.
struct ImageEmbedding {
  GeneralEndo map;
  IntervalUnion image;
  GeneralEndo::Fn inverse;
  std::string label;
};

// Throws std::invalid_argument unless f is injective.
ImageEmbedding embedding_of(const PiecewiseEndo& f);
// Lazy order isomorphism of the rationals onto a, which must have no least
// or greatest element.
ImageEmbedding embedding_onto(const IntervalUnion& a);

struct Absorbed {
  Variant variant;
  CoordCertPtr g_cert;  // certifies g
  CertPtr gf_cert;      // certifies g o f
  GeneralEndo g;
  GeneralEndo gf;
};

// Builds g so that g and g o f are both certified; the variant follows the
// boundedness of the image of f.
Absorbed absorb(const ImageEmbedding& f);
Absorbed absorb(const PiecewiseEndo& f);

struct CertCheck {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Sampled certificate invariants: monotonicity, red and distinct image
// classes, blue and red classes between image pairs, class monotonicity,
// boundedness matching the variant.
CertCheck check_certificate(GammaCert& cert, std::mt19937_64& rng, std::size_t samples = 200,
                            std::size_t pairs = 100);

}  // namespace dlo
