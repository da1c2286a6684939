#include "dlo/gamma.hpp"

#include <stdexcept>

namespace dlo {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::core: return "core";
    case Variant::plus: return "plus";
    case Variant::minus: return "minus";
    case Variant::pm: return "pm";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "core") return Variant::core;
  if (s == "plus") return Variant::plus;
  if (s == "minus") return Variant::minus;
  if (s == "pm") return Variant::pm;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

bool has_top(Variant v) { return v == Variant::plus || v == Variant::pm; }
bool has_bottom(Variant v) { return v == Variant::minus || v == Variant::pm; }

Variant variant_of(bool bottom, bool top) {
  if (bottom && top) return Variant::pm;
  if (bottom) return Variant::minus;
  if (top) return Variant::plus;
  return Variant::core;
}

Variant GammaCert::variant() const {
  return variant_of(index()->min_element().has_value(), index()->max_element().has_value());
}

GeneralEndo GammaCert::as_endo(std::shared_ptr<GammaCert> self) const {
  std::string label = "g[" + describe() + "]";
  return GeneralEndo::lazy([self](const Rat& x) { return self->apply(x); }, label);
}

CoordCert::CoordCert(SpecPtr index, std::vector<ConstraintPtr> psi_constraints, std::string name)
    : index_(index),
      name_(std::move(name)),
      psi_(full_q(), red_points(index), {}, std::move(psi_constraints), name_ + ".psi"),
      phi_(full_q(), lex_product(index, full_q()), {}, {}, name_ + ".phi") {}

Rat CoordCert::apply(const Rat& x) {
  Elem q = psi_.fwd(elem(x));
  return at(concat(q, elem(Rat(0))));
}

Elem CoordCert::class_of(const Rat& z) { return prefix(coords(z), index_->arity()); }

Rat CoordCert::representative(const Elem& q) {
  if (index_->colour(q) != Colour::red) throw std::invalid_argument("blue class has no representative");
  return at(concat(q, elem(Rat(0))));
}

Rat CoordCert::member(const Elem& q) { return at(concat(q, elem(Rat(0)))); }

Rat CoordCert::member_above(const Elem& q, const Rat& y) {
  Elem c = coords(y);
  if (prefix(c, index_->arity()) != q) throw std::invalid_argument(to_string(y) + " is not in class " + to_string(q));
  Elem t = *full_q()->least(Window::open(suffix(c, index_->arity()), std::nullopt));
  return at(concat(q, t));
}

std::optional<Rat> CoordCert::preimage(const Rat& s) {
  Elem c = coords(s);
  if (c.back() != ExtRat(0)) return std::nullopt;
  Elem q = prefix(c, index_->arity());
  if (index_->colour(q) != Colour::red) return std::nullopt;
  return as_rat(psi_.bwd(q));
}

std::string CoordCert::dump() const { return psi_.dump() + phi_.dump(); }

CoordCertPtr gamma_generic_cert(Variant v) {
  return std::make_shared<CoordCert>(ext_coloured_q(has_bottom(v), has_top(v)), std::vector<ConstraintPtr>{},
                                     std::string("generic-") + to_string(v));
}

Certified gamma_generic(Variant v) {
  CoordCertPtr c = gamma_generic_cert(v);
  return Certified{c->as_endo(c), c};
}

bool sim_related(const ImageSpec& a, const Rat& x, const Rat& y) {
  if (x == y) return true;
  const Rat& lo = x < y ? x : y;
  const Rat& hi = x < y ? y : x;
  if (const auto* u = std::get_if<IntervalUnion>(&a)) return u->count_between_capped(lo, hi) <= 1;
  const CertPtr& c = std::get<CertPtr>(a);
  return c->class_of(lo) == c->class_of(hi);
}

}  // namespace dlo
