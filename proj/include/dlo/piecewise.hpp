#pragma once

#include "dlo/interval.hpp"
#include "dlo/rat.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlo {

struct Piece {
  RatInterval domain;
  Rat slope;
  Rat intercept;

  Rat at(const Rat& x) const { return slope * x + intercept; }
  // Value (or one-sided limit) of the affine formula at an extended point.
  ExtRat at_ext(const ExtRat& x) const;

  friend bool operator==(const Piece&, const Piece&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EndoClass {
  bool constant = false;
  bool injective = false;
  bool surjective = false;
  bool automorphism() const { return injective && surjective; }
  friend bool operator==(const EndoClass&, const EndoClass&) = default;
};

std::string to_string(const EndoClass& c);

// Total weakly monotone map of the rationals, affine with slope >= 0 on each
// of finitely many intervals. Always held in canonical form, so equality of
// maps is equality of piece lists.
class PiecewiseEndo {
 public:
  // Validates the partition and monotonicity, then canonicalizes. Throws
  // std::invalid_argument.
  explicit PiecewiseEndo(std::vector<Piece> pieces);

  static PiecewiseEndo identity();
  static PiecewiseEndo constant(const Rat& c);
  static PiecewiseEndo affine(const Rat& slope, const Rat& intercept);

  const std::vector<Piece>& pieces() const { return pieces_; }
  Rat operator()(const Rat& x) const;
  const Piece& piece_at(const Rat& x) const;

  IntervalUnion image() const;
  // The convex set of points mapped to v, if any.
  std::optional<RatInterval> preimage(const Rat& v) const;
  EndoClass classify() const;

  friend bool operator==(const PiecewiseEndo&, const PiecewiseEndo&) = default;

 private:
  std::vector<Piece> pieces_;
};

// f after g.
PiecewiseEndo compose(const PiecewiseEndo& f, const PiecewiseEndo& g);

// Composition of piece lists where outer need only cover the image of inner.
// Result pieces follow inner's order; not canonicalized.
std::vector<Piece> compose_pieces(const std::vector<Piece>& outer, const std::vector<Piece>& inner);

// One piece per line: "interval : slope*x + intercept". Blank lines and
// lines starting with '#' are ignored.
PiecewiseEndo parse_piecewise(std::string_view text);
std::string to_string(const Piece& p);
std::string to_string(const PiecewiseEndo& f);

EndoClass classify(const PiecewiseEndo& f);

// Least-index rational among the interiors of the non-degenerate components,
// falling back to the least-index isolated point. Throws on an empty set.
Rat representative_point(const IntervalUnion& u);

}  // namespace dlo
