#include "dlo/lazy_iso.hpp"

#include <iterator>

namespace dlo {

bool Constraint::admits(const Elem& src, const Elem& tgt) const {
  Admissible a = targets_for(src);
  return a.window.contains(tgt) && (!a.pred || a.pred(tgt));
}

namespace {

class ColourPreserving : public Constraint {
 public:
  ColourPreserving(SpecPtr s, SpecPtr t) : s_(std::move(s)), t_(std::move(t)) {}
  std::string name() const override { return "colour-preservation"; }
  Admissible targets_for(const Elem& src) const override {
    Colour c = s_->colour(src);
    SpecPtr t = t_;
    return {Window::everything(), [t, c](const Elem& y) { return t->colour(y) == c; }};
  }
  Admissible sources_for(const Elem& tgt) const override {
    Colour c = t_->colour(tgt);
    SpecPtr s = s_;
    return {Window::everything(), [s, c](const Elem& x) { return s->colour(x) == c; }};
  }

 private:
  SpecPtr s_, t_;
};

class Stabilizes : public Constraint {
 public:
  Stabilizes(std::string name, ElemPred in_s, ElemPred in_t)
      : name_(std::move(name)), in_s_(std::move(in_s)), in_t_(std::move(in_t)) {}
  std::string name() const override { return name_; }
  Admissible targets_for(const Elem& src) const override {
    bool inside = in_s_(src);
    ElemPred in_t = in_t_;
    return {Window::everything(), [in_t, inside](const Elem& y) { return in_t(y) == inside; }};
  }
  Admissible sources_for(const Elem& tgt) const override {
    bool inside = in_t_(tgt);
    ElemPred in_s = in_s_;
    return {Window::everything(), [in_s, inside](const Elem& x) { return in_s(x) == inside; }};
  }

 private:
  std::string name_;
  ElemPred in_s_, in_t_;
};

class PreservesRegions : public Constraint {
 public:
  PreservesRegions(std::string name, RegionMap s, RegionMap t)
      : name_(std::move(name)), s_(std::move(s)), t_(std::move(t)) {}
  std::string name() const override { return name_; }
  Admissible targets_for(const Elem& src) const override { return across(s_.label(src), t_); }
  Admissible sources_for(const Elem& tgt) const override { return across(t_.label(tgt), s_); }

 private:
  static Admissible across(long label, const RegionMap& other) {
    auto lab = other.label;
    return {other.window(label), [lab, label](const Elem& e) { return lab(e) == label; }};
  }
  std::string name_;
  RegionMap s_, t_;
};

}  // namespace

ConstraintPtr colour_preserving(SpecPtr source, SpecPtr target) {
  if (!source->coloured() || !target->coloured())
    throw std::invalid_argument("colour preservation needs coloured specs");
  return std::make_shared<ColourPreserving>(std::move(source), std::move(target));
}

ConstraintPtr stabilizes(std::string name, ElemPred in_source_set, ElemPred in_target_set) {
  return std::make_shared<Stabilizes>(std::move(name), std::move(in_source_set), std::move(in_target_set));
}

ConstraintPtr preserves_regions(std::string name, RegionMap source, RegionMap target) {
  return std::make_shared<PreservesRegions>(std::move(name), std::move(source), std::move(target));
}

LazyIso::LazyIso(SpecPtr source, SpecPtr target, const std::vector<std::pair<Elem, Elem>>& seed,
                 std::vector<ConstraintPtr> constraints, std::string name)
    : source_(std::move(source)), target_(std::move(target)), constraints_(std::move(constraints)),
      name_(std::move(name)) {
  for (const auto& [x, y] : seed) insert_checked(x, y, true);
  auto smin = source_->min_element(), tmin = target_->min_element();
  auto smax = source_->max_element(), tmax = target_->max_element();
  if (smin.has_value() != tmin.has_value() || smax.has_value() != tmax.has_value())
    throw std::invalid_argument(name_ + ": endpoint-incompatible specs " + source_->describe() + " and " +
                                target_->describe());
  if (smin && !fwd_.count(*smin)) insert_checked(*smin, *tmin, true);
  if (smax && !fwd_.count(*smax)) insert_checked(*smax, *tmax, true);
}

void LazyIso::insert_checked(const Elem& x, const Elem& y, bool seed) {
  const char* what = seed ? "seed" : "commit";
  auto pair_text = [&] { return to_string(x) + " -> " + to_string(y); };
  if (!source_->contains(x)) throw std::domain_error(name_ + ": " + to_string(x) + " not in " + source_->describe());
  if (!target_->contains(y)) throw std::domain_error(name_ + ": " + to_string(y) + " not in " + target_->describe());
  if (auto it = fwd_.find(x); it != fwd_.end()) {
    if (it->second == y) return;
    throw SeedViolation("partial-isomorphism", name_ + ": " + what + " pair " + pair_text() + " clashes with " +
                                                   to_string(x) + " -> " + to_string(it->second));
  }
  if (bwd_.count(y))
    throw SeedViolation("partial-isomorphism", name_ + ": " + what + " pair " + pair_text() + " repeats a value");
  auto hi = fwd_.upper_bound(x);
  if (hi != fwd_.end() && !(y < hi->second))
    throw SeedViolation("partial-isomorphism", name_ + ": " + what + " pair " + pair_text() + " breaks monotonicity");
  if (hi != fwd_.begin() && !(std::prev(hi)->second < y))
    throw SeedViolation("partial-isomorphism", name_ + ": " + what + " pair " + pair_text() + " breaks monotonicity");
  for (const auto& c : constraints_)
    if (!c->admits(x, y))
      throw SeedViolation(c->name(), name_ + ": " + what + " pair " + pair_text() + " violates " + c->name());
  fwd_.emplace(x, y);
  bwd_.emplace(y, x);
}

void LazyIso::commit(const Elem& x, const Elem& y) { insert_checked(x, y, false); }

Elem LazyIso::fwd(const Elem& x) {
  if (auto it = fwd_.find(x); it != fwd_.end()) return it->second;
  if (!source_->contains(x)) throw std::domain_error(name_ + ": " + to_string(x) + " not in " + source_->describe());
  auto hi = fwd_.upper_bound(x);
  std::optional<Elem> lo_val, hi_val;
  if (hi != fwd_.end()) hi_val = hi->second;
  if (hi != fwd_.begin()) lo_val = std::prev(hi)->second;
  Window w = Window::open(lo_val, hi_val);
  std::vector<ElemPred> preds;
  for (const auto& c : constraints_) {
    Admissible a = c->targets_for(x);
    w = w.intersect(a.window);
    if (a.pred) preds.push_back(std::move(a.pred));
  }
  auto all = [&preds](const Elem& y) {
    for (const auto& p : preds)
      if (!p(y)) return false;
    return true;
  };
  auto y = target_->least(w, preds.empty() ? ElemPred{} : ElemPred(all));
  if (!y)
    throw std::logic_error(name_ + ": no admissible image for " + to_string(x) + " in " + to_string(w));
  fwd_.emplace(x, *y);
  bwd_.emplace(*y, x);
  return *y;
}

Elem LazyIso::bwd(const Elem& y) {
  if (auto it = bwd_.find(y); it != bwd_.end()) return it->second;
  if (!target_->contains(y)) throw std::domain_error(name_ + ": " + to_string(y) + " not in " + target_->describe());
  auto hi = bwd_.upper_bound(y);
  std::optional<Elem> lo_val, hi_val;
  if (hi != bwd_.end()) hi_val = hi->second;
  if (hi != bwd_.begin()) lo_val = std::prev(hi)->second;
  Window w = Window::open(lo_val, hi_val);
  std::vector<ElemPred> preds;
  for (const auto& c : constraints_) {
    Admissible a = c->sources_for(y);
    w = w.intersect(a.window);
    if (a.pred) preds.push_back(std::move(a.pred));
  }
  auto all = [&preds](const Elem& x) {
    for (const auto& p : preds)
      if (!p(x)) return false;
    return true;
  };
  auto x = source_->least(w, preds.empty() ? ElemPred{} : ElemPred(all));
  if (!x)
    throw std::logic_error(name_ + ": no admissible preimage for " + to_string(y) + " in " + to_string(w));
  fwd_.emplace(*x, y);
  bwd_.emplace(y, *x);
  return *x;
}

std::optional<Elem> LazyIso::lookup_fwd(const Elem& x) const {
  auto it = fwd_.find(x);
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<Elem> LazyIso::lookup_bwd(const Elem& y) const {
  auto it = bwd_.find(y);
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Elem, Elem>> LazyIso::target_pred(const Elem& y) const {
  auto it = bwd_.lower_bound(y);
  if (it == bwd_.begin()) return std::nullopt;
  --it;
  return std::make_pair(it->second, it->first);
}

std::optional<std::pair<Elem, Elem>> LazyIso::target_succ(const Elem& y) const {
  auto it = bwd_.upper_bound(y);
  if (it == bwd_.end()) return std::nullopt;
  return std::make_pair(it->second, it->first);
}

bool LazyIso::consistent() const {
  if (fwd_.size() != bwd_.size()) return false;
  const Elem* prev = nullptr;
  for (const auto& [x, y] : fwd_) {
    if (prev && !(*prev < y)) return false;
    prev = &y;
    auto back = bwd_.find(y);
    if (back == bwd_.end() || back->second != x) return false;
    for (const auto& c : constraints_)
      if (!c->admits(x, y)) return false;
  }
  return true;
}

std::string LazyIso::dump() const {
  std::string s = name_ + " : " + source_->describe() + " -> " + target_->describe() + "\n";
  for (const auto& [x, y] : fwd_) s += "  " + to_string(x) + " -> " + to_string(y) + "\n";
  return s;
}

FinitePartialMap memo_as_map(const LazyIso& iso) {
  FinitePartialMap m;
  for (const auto& [x, y] : iso.forward_memo())
    if (x.size() == 1 && y.size() == 1 && x[0].is_finite() && y[0].is_finite()) m.insert(x[0].value(), y[0].value());
  return m;
}

}  // namespace dlo
