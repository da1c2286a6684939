#include "dlo/enumeration.hpp"
#include "dlo/gamma_build.hpp"

#include <stdexcept>

namespace dlo {

namespace {

class CompositeCert : public GammaCert {
 public:
  CompositeCert(CoordCertPtr outer, CertPtr inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}

  SpecPtr index() const override { return inner_->index(); }
  Rat apply(const Rat& x) override { return outer_->apply(inner_->apply(x)); }

  Elem class_of(const Rat& z) override {
    Elem c = outer_->class_of(z);
    const ExtRat& q = c.front();
    if (q.is_neg_inf()) return *index()->min_element();
    if (q.is_pos_inf()) return *index()->max_element();
    if (outer_->class_colour(c) == Colour::red) return inner_->class_of(as_rat(outer_->psi().bwd(c)));
    return settle_blue(c);
  }

  Rat representative(const Elem& p) override { return outer_->apply(inner_->representative(p)); }
  Rat member(const Elem& p) override { return outer_->apply(inner_->member(p)); }
  Rat member_above(const Elem&, const Rat& y) override { return outer_->member_above(outer_->class_of(y), y); }

  std::optional<Rat> preimage(const Rat& s) override {
    auto y = outer_->preimage(s);
    if (!y) return std::nullopt;
    return inner_->preimage(*y);
  }

  std::string describe() const override { return "(" + outer_->describe() + ") o (" + inner_->describe() + ")"; }
  std::string dump() const override { return outer_->dump() + inner_->dump(); }

 private:
  // A blue outer class sits at a cut of the outer psi. Once the nearest
  // committed pairs on both sides come from one inner class, the cut lies in
  // that class; otherwise commit two points of one inner class around it.
  Elem settle_blue(const Elem& c) {
    LazyIso& psi = outer_->psi();
    for (;;) {
      auto lo = psi.target_pred(c);
      auto hi = psi.target_succ(c);
      if (lo && hi) {
        Elem p_lo = inner_->class_of(as_rat(lo->first));
        if (p_lo == inner_->class_of(as_rat(hi->first))) return p_lo;
      }
      ExtRat y_lo = lo ? ExtRat(as_rat(lo->first)) : ExtRat::neg_inf();
      ExtRat y_hi = hi ? ExtRat(as_rat(hi->first)) : ExtRat::pos_inf();
      Rat y1 = simplest_between(y_lo, y_hi);
      Elem p1 = inner_->class_of(y1);
      Rat y2 = hi && inner_->class_of(as_rat(hi->first)) == p1 ? simplest_between(y1, y_hi)
                                                               : inner_->member_above(p1, y1);
      if (ExtRat(y2) >= y_hi) throw std::logic_error("no room to settle a blue class");
      const SpecPtr& reds = psi.target();
      Elem r1 = *reds->least(Window::open(lo ? std::optional<Elem>(lo->second) : std::nullopt, c));
      Elem r2 = *reds->least(Window::open(c, hi ? std::optional<Elem>(hi->second) : std::nullopt));
      psi.commit(elem(y1), r1);
      psi.commit(elem(y2), r2);
    }
  }

  CoordCertPtr outer_;
  CertPtr inner_;
};

}  // namespace

Certified compose_certified(const CoordCertPtr& cert2, const CertPtr& cert1) {
  if (cert2->index()->arity() != 1) throw std::invalid_argument("outer certificate must have a flat index");
  if (cert2->variant() != cert1->variant())
    throw std::invalid_argument(std::string("variant mismatch: ") + to_string(cert2->variant()) + " vs " +
                                to_string(cert1->variant()));
  CertPtr c = std::make_shared<CompositeCert>(cert2, cert1);
  return Certified{c->as_endo(c), c};
}

ImageEmbedding embedding_of(const PiecewiseEndo& f) {
  if (!f.classify().injective) throw std::invalid_argument("embedding needs an injective map");
  GeneralEndo::Fn inv = [f](const Rat& y) {
    auto pre = f.preimage(y);
    if (!pre) throw std::domain_error(to_string(y) + " is not in the image");
    return pre->lower().value();
  };
  return ImageEmbedding{f, f.image(), inv, "piecewise"};
}

ImageEmbedding embedding_onto(const IntervalUnion& a) {
  if (a.empty()) throw std::invalid_argument("empty image");
  const auto& first = a.components().front();
  const auto& last = a.components().back();
  if (first.lower_closed() || last.upper_closed()) throw std::invalid_argument("image must have no least or greatest point");
  auto iso = std::make_shared<LazyIso>(full_q(), interval_union_spec(a), std::vector<std::pair<Elem, Elem>>{},
                                       std::vector<ConstraintPtr>{}, "onto " + to_string(a));
  GeneralEndo map = GeneralEndo::lazy([iso](const Rat& x) { return iso->fwd(x); }, "onto " + to_string(a));
  return ImageEmbedding{map, a, [iso](const Rat& y) { return iso->bwd(y); }, "onto " + to_string(a)};
}

}  // namespace dlo
