#include "dlo/enumeration.hpp"

#include <stdexcept>

namespace dlo {

namespace {

// cw(k) read off the binary expansion of k: after the leading 1, a 0 bit
// moves a/b to a/(a+b) and a 1 bit moves it to (a+b)/b.
Rat calkin_wilf(const Int& k) {
  Int a = 1, b = 1;
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    if (mpz_tstbit(k.get_mpz_t(), i))
      a += b;
    else
      b += a;
  }
  return make_rat(a, b);
}

Rat enumerate_uncached(const Int& n) {
  if (n == 0) return Rat(0);
  Int k = (n + 1) / 2;
  Rat v = calkin_wilf(k);
  return mpz_odd_p(n.get_mpz_t()) ? v : Rat(-v);
}

constexpr std::uint64_t kCacheSize = 1 << 14;

const std::vector<Rat>& prefix_cache() {
  static const std::vector<Rat> cache = [] {
    std::vector<Rat> out;
    out.reserve(kCacheSize);
    for (std::uint64_t i = 0; i < kCacheSize; ++i) out.push_back(enumerate_uncached(Int(static_cast<unsigned long>(i))));
    return out;
  }();
  return cache;
}

// Smallest-depth rational in the open interval (x, y) with 0 <= x < y.
Rat simplest_nonneg(Rat x, ExtRat y) {
  std::vector<Int> parts;
  Int last;
  for (;;) {
    Int a = floor_of(x);
    Int n = a + 1;
    if (y.is_pos_inf() || Rat(n) < y.value()) {
      last = n;
      break;
    }
    parts.push_back(a);
    Rat lower = 1 / (y.value() - a);
    ExtRat upper = (x == a) ? ExtRat::pos_inf() : ExtRat(Rat(1 / (x - a)));
    x = lower;
    y = upper;
  }
  Rat v(last);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) v = Rat(*it) + 1 / v;
  return v;
}

}  // namespace

Rat enumerate(std::uint64_t n) {
  if (n < kCacheSize) return prefix_cache()[n];
  return enumerate_uncached(Int(std::to_string(n)));
}

Rat enumerate(const Int& n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative index");
  if (n < static_cast<unsigned long>(kCacheSize)) return prefix_cache()[n.get_ui()];
  return enumerate_uncached(n);
}

Int calkin_wilf_index(const Rat& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("calkin_wilf_index needs a positive rational");
  Int a = x.get_num();
  Int b = x.get_den();
  // Runs of equal bits, collected from the node up to the root.
  std::vector<std::pair<bool, Int>> runs;
  while (!(a == 1 && b == 1)) {
    if (a < b) {
      Int k = (b - 1) / a;
      b -= k * a;
      runs.emplace_back(false, k);
    } else {
      Int k = (a - 1) / b;
      a -= k * b;
      runs.emplace_back(true, k);
    }
  }
  Int index = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    unsigned long len = it->second.get_ui();
    if (!it->second.fits_ulong_p()) throw std::overflow_error("Calkin-Wilf run too long");
    mpz_mul_2exp(index.get_mpz_t(), index.get_mpz_t(), len);
    if (it->first) {
      Int ones;
      mpz_ui_pow_ui(ones.get_mpz_t(), 2, len);
      index += ones - 1;
    }
  }
  return index;
}

Int enum_index(const Rat& x) {
  int s = sgn(x);
  if (s == 0) return 0;
  Int k = calkin_wilf_index(s > 0 ? x : Rat(-x));
  return s > 0 ? Int(2 * k - 1) : Int(2 * k);
}

Rat simplest_between(const ExtRat& lo, const ExtRat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  const ExtRat zero(0L);
  if (lo < zero && zero < hi) return Rat(0);
  if (lo >= zero) return simplest_nonneg(lo.value(), hi);
  ExtRat neg_lo = lo.is_neg_inf() ? ExtRat::pos_inf() : ExtRat(Rat(-lo.value()));
  return -simplest_nonneg(Rat(-hi.value()), neg_lo);
}

RationalStream::RationalStream(const RatInterval& range) {
  if (range.is_point()) {
    const Rat& v = range.lower().value();
    heap_.push(Cell{enum_index(v), v, std::nullopt});
    return;
  }
  push_span(range.lower(), range.upper());
  if (range.lower_closed()) {
    const Rat& v = range.lower().value();
    heap_.push(Cell{enum_index(v), v, std::nullopt});
  }
  if (range.upper_closed()) {
    const Rat& v = range.upper().value();
    heap_.push(Cell{enum_index(v), v, std::nullopt});
  }
}

void RationalStream::push_span(const ExtRat& lo, const ExtRat& hi) {
  Rat m = simplest_between(lo, hi);
  Int idx = enum_index(m);
  heap_.push(Cell{std::move(idx), std::move(m), std::make_pair(lo, hi)});
}

std::optional<std::pair<Int, Rat>> RationalStream::next() {
  if (heap_.empty()) return std::nullopt;
  Cell top = heap_.top();
  heap_.pop();
  if (top.span) {
    push_span(top.span->first, ExtRat(top.value));
    push_span(ExtRat(top.value), top.span->second);
  }
  return std::make_pair(std::move(top.index), std::move(top.value));
}

std::optional<Rat> least_where(const RatInterval& range, const std::function<bool(const Rat&)>& pred,
                               std::uint64_t max_steps) {
  RationalStream stream(range);
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    auto next = stream.next();
    if (!next) return std::nullopt;
    if (pred(next->second)) return next->second;
  }
  throw std::runtime_error("least_where: search budget exhausted on " + to_string(range));
}

}  // namespace dlo

namespace dlo {

std::optional<Rat> mediant_witness(const Rat& x, const Rat& y, Colour c, const Int& max_den) {
  if (!(x < y)) throw std::invalid_argument("mediant_witness needs x < y");
  std::vector<std::pair<Rat, Rat>> frontier{{x, y}};
  while (!frontier.empty()) {
    std::vector<std::pair<Rat, Rat>> next;
    for (const auto& [lo, hi] : frontier) {
      Rat m = make_rat(lo.get_num() + hi.get_num(), lo.get_den() + hi.get_den());
      if (m.get_den() > max_den) continue;
      if (colour(m) == c) return m;
      next.emplace_back(lo, m);
      next.emplace_back(m, hi);
    }
    if (next.size() > 4096) next.resize(4096);
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace dlo
