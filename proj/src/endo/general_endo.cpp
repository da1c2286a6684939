#include "dlo/general_endo.hpp"

namespace dlo {

GeneralEndo GeneralEndo::lazy(Fn fn, std::string label) {
  return GeneralEndo(Lazy{std::make_shared<Fn>(std::move(fn)), std::move(label)});
}

Rat GeneralEndo::operator()(const Rat& x) const {
  if (const auto* p = piecewise()) return (*p)(x);
  return (*std::get<Lazy>(rep_).fn)(x);
}

std::string GeneralEndo::describe() const {
  if (const auto* p = piecewise()) return to_string(*p);
  return std::get<Lazy>(rep_).label;
}

GeneralEndo compose(const GeneralEndo& f, const GeneralEndo& g) {
  if (f.piecewise() && g.piecewise()) return compose(*f.piecewise(), *g.piecewise());
  return GeneralEndo::lazy([f, g](const Rat& x) { return f(g(x)); }, "(" + f.describe() + ") o (" + g.describe() + ")");
}

}  // namespace dlo
