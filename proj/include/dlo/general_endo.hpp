#pragma once

#include "dlo/piecewise.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>

namespace dlo {

// An endomorphism given either symbolically or as a lazily evaluated
// function (typically backed by a LazyIso). Copies share the lazy state.
class GeneralEndo {
 public:
  using Fn = std::function<Rat(const Rat&)>;

  GeneralEndo(PiecewiseEndo p) : rep_(std::move(p)) {}  // NOLINT implicit
  static GeneralEndo lazy(Fn fn, std::string label);

  Rat operator()(const Rat& x) const;
  const PiecewiseEndo* piecewise() const { return std::get_if<PiecewiseEndo>(&rep_); }
  std::string describe() const;

 private:
  struct Lazy {
    std::shared_ptr<Fn> fn;
    std::string label;
  };
  explicit GeneralEndo(Lazy l) : rep_(std::move(l)) {}

  std::variant<PiecewiseEndo, Lazy> rep_;
};

// f after g; stays symbolic when both sides are.
GeneralEndo compose(const GeneralEndo& f, const GeneralEndo& g);

}  // namespace dlo
