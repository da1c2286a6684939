#pragma once

#include "dlo/interval.hpp"
#include "dlo/rat.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace dlo {

// The fixed enumeration of the rationals: e(0) = 0, e(2k-1) = cw(k) and
// e(2k) = -cw(k), where cw is the Calkin-Wilf sequence.
Rat enumerate(std::uint64_t n);
Rat enumerate(const Int& n);

// Position of a positive rational in the Calkin-Wilf sequence (1-based).
Int calkin_wilf_index(const Rat& x);
// Inverse of enumerate.
Int enum_index(const Rat& x);

// The element of least enumeration index in the open interval (lo, hi).
// Requires lo < hi. Within an interval this is the Stern-Brocot simplest
// fraction, since Calkin-Wilf rows coincide with Stern-Brocot depths.
Rat simplest_between(const ExtRat& lo, const ExtRat& hi);

// The rationals of an interval, produced in increasing enumeration index.
class RationalStream {
 public:
  explicit RationalStream(const RatInterval& range);

  std::optional<std::pair<Int, Rat>> next();

 private:
  struct Cell {
    Int index;
    Rat value;
    // Open subinterval (lo, hi) whose simplest element is value; absent for
    // isolated closed endpoints.
    std::optional<std::pair<ExtRat, ExtRat>> span;
  };
  struct Later {
    bool operator()(const Cell& a, const Cell& b) const { return a.index > b.index; }
  };
  void push_span(const ExtRat& lo, const ExtRat& hi);

  std::priority_queue<Cell, std::vector<Cell>, Later> heap_;
};

// First rational of the interval, in enumeration order, satisfying pred.
// Throws std::runtime_error after max_steps candidates.
std::optional<Rat> least_where(const RatInterval& range,
                               const std::function<bool(const Rat&)>& pred,
                               std::uint64_t max_steps = 1'000'000);

}  // namespace dlo

namespace dlo {

// Searches the mediant tree between x < y for a rational of colour c with
// denominator at most max_den. Breadth-first, so the result is among the
// shallowest mediants.
std::optional<Rat> mediant_witness(const Rat& x, const Rat& y, Colour c, const Int& max_den = Int(1000000));

}  // namespace dlo
