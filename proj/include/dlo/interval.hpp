#pragma once

#include "dlo/rat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlo {

// Interval of the rationals with rational or infinite endpoints. Infinite
// endpoints are always open; a degenerate interval is a closed point.
class RatInterval {
 public:
  RatInterval(ExtRat lower, bool lower_closed, ExtRat upper, bool upper_closed);

  static RatInterval all();
  static RatInterval point(const Rat& x);
  static RatInterval open(ExtRat lo, ExtRat hi);
  static RatInterval closed(const Rat& lo, const Rat& hi);

  const ExtRat& lower() const { return lower_; }
  const ExtRat& upper() const { return upper_; }
  bool lower_closed() const { return lower_closed_; }
  bool upper_closed() const { return upper_closed_; }

  bool is_point() const;
  bool bounded_below() const { return lower_.is_finite(); }
  bool bounded_above() const { return upper_.is_finite(); }
  bool contains(const Rat& x) const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  ExtRat lower_;
  bool lower_closed_;
  ExtRat upper_;
  bool upper_closed_;
};

bool interval_contains(const RatInterval& i, const Rat& x);

// Empty result when the two intervals are disjoint.
std::optional<RatInterval> intersect(const RatInterval& a, const RatInterval& b);

// Image of the interval under x -> slope * x + intercept with slope > 0.
RatInterval affine_image(const RatInterval& i, const Rat& slope, const Rat& intercept);
// Preimage under the same kind of affine map.
RatInterval affine_preimage(const RatInterval& i, const Rat& slope, const Rat& intercept);

std::string to_string(const RatInterval& i);
// Bracket notation, e.g. "[0,1)", "(-inf,2]", "[3,3]".
RatInterval parse_interval(std::string_view text);

// Finite union of intervals kept as sorted, pairwise disjoint, non-touching
// components.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<RatInterval> parts);

  static IntervalUnion all() { return IntervalUnion({RatInterval::all()}); }

  const std::vector<RatInterval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rat& x) const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  IntervalUnion complement() const;
  IntervalUnion minus(const IntervalUnion& other) const { return intersect(other.complement()); }
  bool subset_of(const IntervalUnion& other) const { return minus(other).empty(); }

  // Cardinality of the set restricted to the open interval (lo, hi), capped at
  // 2: any non-degenerate component makes the count infinite.
  int count_between_capped(const ExtRat& lo, const ExtRat& hi) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<RatInterval> parts_;
};

std::string to_string(const IntervalUnion& u);

}  // namespace dlo
