#pragma once

#include "dlo/general_endo.hpp"
#include "dlo/interval.hpp"
#include "dlo/lazy_iso.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace dlo {

// Which blue endpoint classes the index order carries: none, a greatest one
// (image bounded above), a least one, or both.
enum class Variant { core, plus, minus, pm };

const char* to_string(Variant v);
Variant parse_variant(std::string_view s);
bool has_top(Variant v);
bool has_bottom(Variant v);
Variant variant_of(bool bottom, bool top);

// Certificate that an embedding g spreads its image out: the rationals are
// cut into convex classes indexed by a coloured dense order, red classes
// holding exactly one image point and blue ones none.
class GammaCert {
 public:
  virtual ~GammaCert() = default;

  virtual SpecPtr index() const = 0;
  virtual Rat apply(const Rat& x) = 0;
  virtual Elem class_of(const Rat& z) = 0;
  // The image point of a red class.
  virtual Rat representative(const Elem& q) = 0;
  // Some point of any class.
  virtual Rat member(const Elem& q) = 0;
  // A point of class q strictly above y, where y lies in class q.
  virtual Rat member_above(const Elem& q, const Rat& y) = 0;
  // g^-1(s) when s is an image point.
  virtual std::optional<Rat> preimage(const Rat& s) = 0;
  virtual std::string describe() const = 0;
  virtual std::string dump() const = 0;

  Variant variant() const;
  Colour class_colour(const Elem& q) const { return index()->colour(q); }
  GeneralEndo as_endo(std::shared_ptr<GammaCert> self) const;
};

using CertPtr = std::shared_ptr<GammaCert>;

// Certificate held in coordinates: psi sends x to the red index of the class
// of g(x), and phi identifies the rationals with Lex(index, Q) so that class q
// is the block with head q and g(x) = phi^-1(psi(x), 0).
class CoordCert : public GammaCert {
 public:
  CoordCert(SpecPtr index, std::vector<ConstraintPtr> psi_constraints, std::string name);

  SpecPtr index() const override { return index_; }
  Rat apply(const Rat& x) override;
  Elem class_of(const Rat& z) override;
  Rat representative(const Elem& q) override;
  Rat member(const Elem& q) override;
  Rat member_above(const Elem& q, const Rat& y) override;
  std::optional<Rat> preimage(const Rat& s) override;
  std::string describe() const override { return name_; }
  std::string dump() const override;

  Elem coords(const Rat& z) { return phi_.fwd(elem(z)); }
  Rat at(const Elem& c) { return as_rat(phi_.bwd(c)); }
  LazyIso& psi() { return psi_; }
  LazyIso& phi() { return phi_; }

 private:
  SpecPtr index_;
  std::string name_;
  LazyIso psi_;
  LazyIso phi_;
};

using CoordCertPtr = std::shared_ptr<CoordCert>;

struct Certified {
  GeneralEndo g;
  CertPtr cert;
};

CoordCertPtr gamma_generic_cert(Variant v);
Certified gamma_generic(Variant v);

// A set order-isomorphic to the rationals, given as an interval union or by a
// certificate for an embedding with that image.
using ImageSpec = std::variant<IntervalUnion, CertPtr>;

// At most one point of the set strictly between x and y.
bool sim_related(const ImageSpec& a, const Rat& x, const Rat& y);

}  // namespace dlo
