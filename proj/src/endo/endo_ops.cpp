#include "dlo/endo_ops.hpp"

#include "dlo/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dlo {

namespace {

Rat first_of(const RatInterval& i) { return RationalStream(i).next()->second; }

bool plateau(const Piece& p) { return p.slope == 0 && !p.domain.is_point(); }

}  // namespace

CancellabilityWitness cancellability_witness(const PiecewiseEndo& f) {
  CancellabilityWitness w;
  for (const auto& p : f.pieces()) {
    if (!plateau(p)) continue;
    Rat x = first_of(p.domain);
    RationalStream inner(RatInterval::open(p.domain.lower(), p.domain.upper()));
    Rat y = inner.next()->second;
    if (y == x) y = inner.next()->second;
    w.left = LeftWitness{x, y};
    break;
  }
  IntervalUnion gaps = f.image().complement();
  if (!gaps.empty()) {
    Rat y = representative_point(gaps);
    PiecewiseEndo g({Piece{RatInterval(ExtRat::neg_inf(), false, y, true), 1, 0},
                     Piece{RatInterval(y, false, ExtRat::pos_inf(), false), 1, 1}});
    PiecewiseEndo h({Piece{RatInterval(ExtRat::neg_inf(), false, y, false), 1, 0},
                     Piece{RatInterval(y, true, ExtRat::pos_inf(), false), 1, 1}});
    w.right = RightWitness{y, g, h};
  }
  return w;
}

PiecewiseEndo right_inverse(const PiecewiseEndo& g, const std::set<Rat>& fixset) {
  if (!g.classify().surjective) throw std::invalid_argument("right_inverse needs a surjective map");
  std::vector<Piece> out;
  std::set<Rat> sectioned;
  for (const auto& p : g.pieces()) {
    if (p.slope != 0 && !p.domain.is_point()) continue;
    const Rat& v = p.intercept;
    RatInterval fibre = *g.preimage(v);
    std::optional<Rat> x;
    for (const auto& q : fixset)
      if (fibre.contains(q)) {
        x = q;
        break;
      }
    if (!x && fibre.upper_closed())
      x = fibre.upper().value();
    else if (!x && fibre.lower_closed())
      x = fibre.lower().value();
    else if (!x)
      x = simplest_between(fibre.lower(), fibre.upper());
    out.push_back(Piece{RatInterval::point(v), 0, *x});
    sectioned.insert(v);
  }
  for (const auto& p : g.pieces()) {
    if (p.slope == 0 || p.domain.is_point()) continue;
    RatInterval img = affine_image(p.domain, p.slope, p.intercept);
    bool lc = img.lower_closed() && !sectioned.count(img.lower().value());
    bool uc = img.upper_closed() && !sectioned.count(img.upper().value());
    out.push_back(Piece{RatInterval(img.lower(), lc, img.upper(), uc), 1 / p.slope, -p.intercept / p.slope});
  }
  std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
    if (a.domain.lower() != b.domain.lower()) return a.domain.lower() < b.domain.lower();
    return a.domain.lower_closed() && !b.domain.lower_closed();
  });
  return PiecewiseEndo(std::move(out));
}

PiecewiseEndo idempotent_with_image(const std::set<Rat>& b) {
  if (b.empty()) throw std::invalid_argument("idempotent_with_image needs a nonempty set");
  std::vector<Rat> pts(b.begin(), b.end());
  std::vector<Piece> pieces;
  ExtRat lo = ExtRat::neg_inf();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool last = i + 1 == pts.size();
    ExtRat hi = last ? ExtRat::pos_inf() : ExtRat(Rat((pts[i] + pts[i + 1]) / 2));
    pieces.push_back(Piece{RatInterval(lo, false, hi, !last), 0, pts[i]});
    lo = hi;
  }
  return PiecewiseEndo(std::move(pieces));
}

Factorization epi_mono_factorize(const PiecewiseEndo& h) {
  auto cache = std::make_shared<std::map<Rat, SpecPtr>>();
  auto zero = single_point(0);
  ProductSpec::TailFn tail = [h, cache, zero](const Elem& head) -> SpecPtr {
    if (!head.front().is_finite()) return zero;
    const Rat& q = head.front().value();
    auto it = cache->find(q);
    if (it != cache->end()) return it->second;
    auto fibre = h.preimage(q);
    SpecPtr s = fibre ? interval_union_spec(IntervalUnion({*fibre})) : zero;
    cache->emplace(q, s);
    return s;
  };
  auto order = std::make_shared<ProductSpec>(full_q(), 1, tail, "tagged image order");
  auto theta = std::make_shared<LazyIso>(full_q(), order, std::vector<std::pair<Elem, Elem>>{},
                                         std::vector<ConstraintPtr>{}, "theta");
  GeneralEndo f = GeneralEndo::lazy([h, theta](const Rat& x) { return as_rat(theta->bwd(Elem{h(x), x})); },
                                    "theta^-1(h(x), x)");
  GeneralEndo g = GeneralEndo::lazy([theta](const Rat& r) { return theta->fwd(elem(r)).front().value(); },
                                    "head(theta(x))");
  GeneralEndo::Fn pre = [h, theta](const Rat& r) {
    auto fibre = h.preimage(r);
    Rat y = fibre ? first_of(*fibre) : Rat(0);
    return as_rat(theta->bwd(Elem{r, y}));
  };
  return Factorization{f, g, pre, theta};
}

Membership image_membership(const PiecewiseEndo& f, const Rat& q) {
  auto fibre = f.preimage(q);
  if (!fibre) return {};
  return Membership{true, first_of(*fibre)};
}

Division divide(const PiecewiseEndo& f, const PiecewiseEndo& g) {
  if (!f.classify().injective || !g.classify().injective)
    throw std::invalid_argument("divide needs injective maps");
  IntervalUnion missing = f.image().minus(g.image());
  if (!missing.empty()) return Division{std::nullopt, representative_point(missing)};
  std::vector<Piece> ginv;
  for (const auto& p : g.pieces()) {
    if (p.domain.is_point())
      ginv.push_back(Piece{RatInterval::point(p.intercept), 0, p.domain.lower().value()});
    else
      ginv.push_back(
          Piece{affine_image(p.domain, p.slope, p.intercept), 1 / p.slope, -p.intercept / p.slope});
  }
  return Division{PiecewiseEndo(compose_pieces(ginv, f.pieces())), std::nullopt};
}

LazyEmbedding copoint_embedding(const Rat& y) {
  auto iso = std::make_shared<LazyIso>(full_q(), q_minus_finite({y}), std::vector<std::pair<Elem, Elem>>{},
                                       std::vector<ConstraintPtr>{}, "copoint");
  GeneralEndo map = GeneralEndo::lazy([iso](const Rat& x) { return iso->fwd(x); },
                                      "embedding onto Q \\ {" + to_string(y) + "}");
  return LazyEmbedding{map, [iso](const Rat& r) { return iso->bwd(r); }, iso};
}

}  // namespace dlo
