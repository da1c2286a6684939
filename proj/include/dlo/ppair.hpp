#pragma once

#include "dlo/gamma.hpp"
#include "dlo/partial_map.hpp"

#include <random>
#include <string>
#include <vector>

namespace dlo {

// Finite partial automorphisms a (on the image side) and b (on the domain
// side) that can be extended together to automorphisms intertwined by g.
struct PPair {
  FinitePartialMap a;
  FinitePartialMap b;
};

struct Violation {
  int clause;  // 0 for a or b failing to be a partial automorphism
  std::string detail;
};

std::vector<Violation> p_check(GammaCert& cert, const PPair& p);

struct CommutingPair {
  GeneralEndo alpha;
  GeneralEndo beta;
  GeneralEndo alpha_inv;
};

// Extends a checked pair to automorphisms with alpha o g = g o beta. Throws
// std::invalid_argument carrying the first violated clause.
CommutingPair extend_pair(const CoordCertPtr& cert, const PPair& p);

struct Recovery {
  bool equal = false;  // s = g(u)
  int recipe = 0;      // 1: s an image point; 2: s in a blue class; 3: s in a red class
  Rat t;
  PPair pair;
  std::optional<CommutingPair> witness;
};

// For s != g(u), a pair fixing u under beta and moving s under alpha.
Recovery recover_witness(const CoordCertPtr& cert, const Rat& u, const Rat& s);

// A random pair built in coordinates so that every clause holds.
PPair random_ppair(const CoordCertPtr& cert, std::mt19937_64& rng, int classes = 3);

}  // namespace dlo
