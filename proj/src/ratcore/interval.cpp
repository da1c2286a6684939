#include "dlo/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlo {

RatInterval::RatInterval(ExtRat lower, bool lower_closed, ExtRat upper, bool upper_closed)
    : lower_(std::move(lower)), lower_closed_(lower_closed), upper_(std::move(upper)),
      upper_closed_(upper_closed) {
  if (lower_.is_pos_inf() || upper_.is_neg_inf())
    throw std::invalid_argument("interval bound on the wrong side");
  if ((!lower_.is_finite() && lower_closed_) || (!upper_.is_finite() && upper_closed_))
    throw std::invalid_argument("infinite endpoints must be open");
  if (lower_ > upper_) throw std::invalid_argument("interval with lower > upper");
  if (lower_ == upper_ && !(lower_closed_ && upper_closed_))
    throw std::invalid_argument("degenerate interval must be closed");
}

RatInterval RatInterval::all() { return RatInterval(ExtRat::neg_inf(), false, ExtRat::pos_inf(), false); }
RatInterval RatInterval::point(const Rat& x) { return RatInterval(x, true, x, true); }
RatInterval RatInterval::open(ExtRat lo, ExtRat hi) { return RatInterval(std::move(lo), false, std::move(hi), false); }
RatInterval RatInterval::closed(const Rat& lo, const Rat& hi) { return RatInterval(lo, true, hi, true); }

bool RatInterval::is_point() const { return lower_ == upper_; }

bool RatInterval::contains(const Rat& x) const {
  ExtRat e(x);
  auto lo = lower_ <=> e;
  if (lo > 0 || (lo == 0 && !lower_closed_)) return false;
  auto hi = e <=> upper_;
  if (hi > 0 || (hi == 0 && !upper_closed_)) return false;
  return true;
}

bool interval_contains(const RatInterval& i, const Rat& x) { return i.contains(x); }

std::optional<RatInterval> intersect(const RatInterval& a, const RatInterval& b) {
  ExtRat lo;
  bool lo_closed;
  if (a.lower() != b.lower()) {
    const RatInterval& w = a.lower() > b.lower() ? a : b;
    lo = w.lower();
    lo_closed = w.lower_closed();
  } else {
    lo = a.lower();
    lo_closed = a.lower_closed() && b.lower_closed();
  }
  ExtRat hi;
  bool hi_closed;
  if (a.upper() != b.upper()) {
    const RatInterval& w = a.upper() < b.upper() ? a : b;
    hi = w.upper();
    hi_closed = w.upper_closed();
  } else {
    hi = a.upper();
    hi_closed = a.upper_closed() && b.upper_closed();
  }
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return RatInterval(lo, lo_closed, hi, hi_closed);
}

namespace {

ExtRat affine_ext(const ExtRat& x, const Rat& slope, const Rat& intercept) {
  if (!x.is_finite()) return x;
  return ExtRat(Rat(slope * x.value() + intercept));
}

ExtRat affine_inv_ext(const ExtRat& y, const Rat& slope, const Rat& intercept) {
  if (!y.is_finite()) return y;
  return ExtRat(Rat((y.value() - intercept) / slope));
}

}  // namespace

RatInterval affine_image(const RatInterval& i, const Rat& slope, const Rat& intercept) {
  if (sgn(slope) <= 0) throw std::invalid_argument("affine_image needs a positive slope");
  return RatInterval(affine_ext(i.lower(), slope, intercept), i.lower_closed(),
                     affine_ext(i.upper(), slope, intercept), i.upper_closed());
}

RatInterval affine_preimage(const RatInterval& i, const Rat& slope, const Rat& intercept) {
  if (sgn(slope) <= 0) throw std::invalid_argument("affine_preimage needs a positive slope");
  return RatInterval(affine_inv_ext(i.lower(), slope, intercept), i.lower_closed(),
                     affine_inv_ext(i.upper(), slope, intercept), i.upper_closed());
}

std::string to_string(const RatInterval& i) {
  std::string s;
  s += i.lower_closed() ? '[' : '(';
  s += to_string(i.lower());
  s += ',';
  s += to_string(i.upper());
  s += i.upper_closed() ? ']' : ')';
  return s;
}

RatInterval parse_interval(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 5) throw std::invalid_argument("not an interval: '" + std::string(text) + "'");
  char open = text.front();
  char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw std::invalid_argument("interval needs bracket delimiters: '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("interval needs a comma: '" + std::string(text) + "'");
  return RatInterval(parse_ext(body.substr(0, comma)), open == '[',
                     parse_ext(body.substr(comma + 1)), close == ']');
}

namespace {

// Orders components by lower end, a closed lower end first.
bool starts_before(const RatInterval& a, const RatInterval& b) {
  if (a.lower() != b.lower()) return a.lower() < b.lower();
  return a.lower_closed() && !b.lower_closed();
}

// True when a (starting no later than b) overlaps or touches b so that the
// union is one interval.
bool joins(const RatInterval& a, const RatInterval& b) {
  if (a.upper() > b.lower()) return true;
  if (a.upper() < b.lower()) return false;
  return a.upper_closed() || b.lower_closed();
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  // a starts no later than b.
  ExtRat hi;
  bool hi_closed;
  if (a.upper() != b.upper()) {
    const RatInterval& w = a.upper() > b.upper() ? a : b;
    hi = w.upper();
    hi_closed = w.upper_closed();
  } else {
    hi = a.upper();
    hi_closed = a.upper_closed() || b.upper_closed();
  }
  return RatInterval(a.lower(), a.lower_closed(), hi, hi_closed);
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<RatInterval> parts) {
  std::sort(parts.begin(), parts.end(), starts_before);
  for (auto& p : parts) {
    if (!parts_.empty() && joins(parts_.back(), p))
      parts_.back() = hull(parts_.back(), p);
    else
      parts_.push_back(std::move(p));
  }
}

bool IntervalUnion::contains(const Rat& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const RatInterval& p) { return p.contains(x); });
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<RatInterval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<RatInterval> out;
  for (const auto& a : parts_)
    for (const auto& b : other.parts_)
      if (auto c = dlo::intersect(a, b)) out.push_back(*c);
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::complement() const {
  std::vector<RatInterval> out;
  ExtRat cursor = ExtRat::neg_inf();
  bool cursor_closed = false;  // whether the gap may include cursor
  bool at_start = true;
  for (const auto& p : parts_) {
    ExtRat lo = p.lower();
    bool gap_hi_closed = !p.lower_closed();
    bool gap_lo_closed = at_start ? false : cursor_closed;
    if (at_start) {
      if (!lo.is_neg_inf()) out.emplace_back(ExtRat::neg_inf(), false, lo, gap_hi_closed);
    } else if (cursor < lo || (cursor == lo && gap_lo_closed && gap_hi_closed)) {
      out.emplace_back(cursor, gap_lo_closed, lo, gap_hi_closed);
    }
    at_start = false;
    cursor = p.upper();
    cursor_closed = !p.upper_closed();
  }
  if (at_start) return IntervalUnion::all();
  if (!cursor.is_pos_inf()) out.emplace_back(cursor, cursor_closed, ExtRat::pos_inf(), false);
  return IntervalUnion(std::move(out));
}

int IntervalUnion::count_between_capped(const ExtRat& lo, const ExtRat& hi) const {
  if (!(lo < hi)) return 0;
  RatInterval window = RatInterval::open(lo, hi);
  int count = 0;
  for (const auto& p : parts_) {
    auto c = dlo::intersect(p, window);
    if (!c) continue;
    if (!c->is_point()) return 2;
    if (++count >= 2) return 2;
  }
  return count;
}

std::string to_string(const IntervalUnion& u) {
  if (u.empty()) return "{}";
  std::string s;
  for (const auto& p : u.components()) {
    if (!s.empty()) s += " u ";
    s += to_string(p);
  }
  return s;
}

}  // namespace dlo
