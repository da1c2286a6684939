#include "dlo/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace dlo {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  return make_rat(parse_int(num), parse_int(den));
}

std::string to_string(const Rat& x) { return x.get_str(); }

Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Colour colour(const Rat& x) {
  bool num_odd = mpz_odd_p(x.get_num_mpz_t());
  bool den_odd = mpz_odd_p(x.get_den_mpz_t());
  return (num_odd && den_odd) ? Colour::blue : Colour::red;
}

const char* to_string(Colour c) { return c == Colour::red ? "red" : "blue"; }

const Rat& ExtRat::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite endpoint");
  return value_;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  return cmp(a.value_, b.value_) <=> 0;
}

std::string to_string(const ExtRat& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return to_string(x.value());
}

ExtRat parse_ext(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "-inf") return ExtRat::neg_inf();
  if (s == "+inf" || s == "inf") return ExtRat::pos_inf();
  return ExtRat(parse_rat(s));
}

}  // namespace dlo
