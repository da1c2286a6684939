#pragma once

#include "dlo/order_spec.hpp"
#include "dlo/partial_map.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlo {

// What a constraint allows on the other side of a pair: a convex window
// (intersected analytically before searching) and an optional predicate.
struct Admissible {
  Window window;
  ElemPred pred;
};

class Constraint {
 public:
  virtual ~Constraint() = default;
  virtual std::string name() const = 0;
  virtual Admissible targets_for(const Elem& src) const = 0;
  virtual Admissible sources_for(const Elem& tgt) const = 0;

  bool admits(const Elem& src, const Elem& tgt) const;
};

using ConstraintPtr = std::shared_ptr<const Constraint>;

// Pairs must have equal colours in the two (coloured) specs.
ConstraintPtr colour_preserving(SpecPtr source, SpecPtr target);

// A point lies in the set iff its partner does. The set is given by a
// membership predicate on each side.
ConstraintPtr stabilizes(std::string name, ElemPred in_source_set, ElemPred in_target_set);

// Both sides are cut into labelled convex regions; pairs must carry equal
// labels. Each side supplies its label function and the window of a label.
struct RegionMap {
  std::function<long(const Elem&)> label;
  std::function<Window(long)> window;
};
ConstraintPtr preserves_regions(std::string name, RegionMap source, RegionMap target);

class SeedViolation : public std::invalid_argument {
 public:
  SeedViolation(std::string constraint, const std::string& what)
      : std::invalid_argument(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// Demand-driven order isomorphism between two specifications. Every new
// pair takes the least-index admissible partner between the memo
// neighbours, so a fixed request sequence always yields the same memo.
// Specs must be dense and without isolated points; endpoints present on both
// sides are paired automatically.
class LazyIso {
 public:
  LazyIso(SpecPtr source, SpecPtr target, const std::vector<std::pair<Elem, Elem>>& seed = {},
          std::vector<ConstraintPtr> constraints = {}, std::string name = "iso");

  Elem fwd(const Elem& x);
  Elem bwd(const Elem& y);
  Rat fwd(const Rat& x) { return as_rat(fwd(elem(x))); }
  Rat bwd(const Rat& y) { return as_rat(bwd(elem(y))); }

  // Adds a pair after validating membership, monotonicity and constraints.
  // Throws SeedViolation naming the constraint that refuses it.
  void commit(const Elem& x, const Elem& y);

  std::optional<Elem> lookup_fwd(const Elem& x) const;
  std::optional<Elem> lookup_bwd(const Elem& y) const;

  // Nearest memo pairs strictly below / above a target element.
  std::optional<std::pair<Elem, Elem>> target_pred(const Elem& y) const;
  std::optional<std::pair<Elem, Elem>> target_succ(const Elem& y) const;

  const std::map<Elem, Elem>& forward_memo() const { return fwd_; }
  const std::map<Elem, Elem>& backward_memo() const { return bwd_; }
  const SpecPtr& source() const { return source_; }
  const SpecPtr& target() const { return target_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return fwd_.size(); }

  // Re-checks the memo: strictly increasing, mutually inverse, every pair
  // admitted by every constraint.
  bool consistent() const;
  std::string dump() const;

 private:
  void insert_checked(const Elem& x, const Elem& y, bool seed);

  SpecPtr source_;
  SpecPtr target_;
  std::vector<ConstraintPtr> constraints_;
  std::string name_;
  std::map<Elem, Elem> fwd_;
  std::map<Elem, Elem> bwd_;
};

// Flat-to-flat memo as a finite partial map of rationals (endpoints dropped).
FinitePartialMap memo_as_map(const LazyIso& iso);

}  // namespace dlo
