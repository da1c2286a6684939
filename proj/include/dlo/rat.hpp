#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace dlo {

// Exact rationals. mpq_class keeps values in lowest terms after every
// arithmetic operation; values built from raw numerator/denominator must go
// through make_rat().
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with q != 0; throws std::invalid_argument.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& x);

Int floor_of(const Rat& x);

enum class Colour { red, blue };

// p/q in lowest terms is red iff p + q is odd and blue iff p, q are both odd.
Colour colour(const Rat& x);
const char* to_string(Colour c);

// A point of the rationals extended by two infinite endpoints. Used as
// coordinates of order elements and as interval bounds.
class ExtRat {
 public:
  enum class Kind : signed char { neg_inf = -1, finite = 0, pos_inf = 1 };

  ExtRat() = default;
  ExtRat(const Rat& v) : kind_(Kind::finite), value_(v) {}  // NOLINT implicit
  ExtRat(long v) : kind_(Kind::finite), value_(v) {}        // NOLINT implicit

  static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }
  static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  // Precondition: is_finite().
  const Rat& value() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  explicit ExtRat(Kind k) : kind_(k) {}
  Kind kind_ = Kind::finite;
  Rat value_;
};

std::string to_string(const ExtRat& x);
// Accepts "-inf", "+inf", "inf" and anything parse_rat accepts.
ExtRat parse_ext(std::string_view text);

}  // namespace dlo
