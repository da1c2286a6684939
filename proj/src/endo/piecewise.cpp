#include "dlo/piecewise.hpp"

#include "dlo/enumeration.hpp"

#include <algorithm>
#include <sstream>

namespace dlo {

ExtRat Piece::at_ext(const ExtRat& x) const {
  if (x.is_finite()) return at(x.value());
  if (slope == 0) return intercept;
  return x;
}

std::string to_string(const EndoClass& c) {
  if (c.constant) return "constant";
  std::string out = c.injective ? "injective" : "not injective";
  out += c.surjective ? ", surjective" : ", not surjective";
  if (c.automorphism()) out += " (automorphism)";
  return out;
}

namespace {

bool same_affine(const Piece& a, const Piece& b) {
  return a.slope == b.slope && a.intercept == b.intercept;
}

Piece point_piece(const Rat& b, const Rat& v) { return Piece{RatInterval::point(b), Rat(0), v}; }

void validate(const std::vector<Piece>& ps) {
  if (ps.empty()) throw std::invalid_argument("piecewise map needs at least one piece");
  if (!ps.front().domain.lower().is_neg_inf()) throw std::invalid_argument("first piece must start at -inf");
  if (!ps.back().domain.upper().is_pos_inf()) throw std::invalid_argument("last piece must end at +inf");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].slope < 0) throw std::invalid_argument("negative slope on " + to_string(ps[i].domain));
    if (i == 0) continue;
    const auto& p = ps[i - 1].domain;
    const auto& q = ps[i].domain;
    if (p.upper() != q.lower() || p.upper_closed() == q.lower_closed())
      throw std::invalid_argument("pieces " + to_string(p) + " and " + to_string(q) + " do not tile");
    if (ps[i - 1].at_ext(p.upper()) > ps[i].at_ext(q.lower()))
      throw std::invalid_argument("map decreases at " + to_string(p.upper()));
  }
}

// Splits closed boundary points off their pieces, then hands each boundary
// point to the right neighbour if its formula agrees there, else to the left,
// else keeps it as a point piece. Equal neighbouring formulas are then merged.
std::vector<Piece> canonicalize(const std::vector<Piece>& in) {
  std::vector<Piece> split;
  for (const auto& p : in) {
    const auto& d = p.domain;
    if (d.is_point()) {
      split.push_back(point_piece(d.lower().value(), p.at(d.lower().value())));
      continue;
    }
    if (d.lower_closed()) split.push_back(point_piece(d.lower().value(), p.at(d.lower().value())));
    split.push_back(Piece{RatInterval(d.lower(), false, d.upper(), false), p.slope, p.intercept});
    if (d.upper_closed()) split.push_back(point_piece(d.upper().value(), p.at(d.upper().value())));
  }

  std::vector<Piece> absorbed;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const Piece& p = split[i];
    if (!p.domain.is_point()) {
      absorbed.push_back(p);
      continue;
    }
    const Rat b = p.domain.lower().value();
    if (i + 1 < split.size() && split[i + 1].at(b) == p.intercept) {
      Piece& r = split[i + 1];
      r.domain = RatInterval(b, true, r.domain.upper(), r.domain.upper_closed());
      continue;
    }
    if (!absorbed.empty() && !absorbed.back().domain.is_point() && absorbed.back().at(b) == p.intercept) {
      Piece& l = absorbed.back();
      l.domain = RatInterval(l.domain.lower(), l.domain.lower_closed(), b, true);
      continue;
    }
    absorbed.push_back(p);
  }

  std::vector<Piece> out;
  for (const auto& p : absorbed) {
    if (!out.empty() && same_affine(out.back(), p)) {
      Piece& l = out.back();
      l.domain = RatInterval(l.domain.lower(), l.domain.lower_closed(), p.domain.upper(), p.domain.upper_closed());
      continue;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

PiecewiseEndo::PiecewiseEndo(std::vector<Piece> pieces) {
  validate(pieces);
  pieces_ = canonicalize(pieces);
}

PiecewiseEndo PiecewiseEndo::identity() { return affine(1, 0); }
PiecewiseEndo PiecewiseEndo::constant(const Rat& c) { return affine(0, c); }
PiecewiseEndo PiecewiseEndo::affine(const Rat& slope, const Rat& intercept) {
  return PiecewiseEndo({Piece{RatInterval::all(), slope, intercept}});
}

const Piece& PiecewiseEndo::piece_at(const Rat& x) const {
  auto it = std::partition_point(pieces_.begin(), pieces_.end(), [&](const Piece& p) {
    const auto& u = p.domain.upper();
    return u < ExtRat(x) || (u == ExtRat(x) && !p.domain.upper_closed());
  });
  return *it;
}

Rat PiecewiseEndo::operator()(const Rat& x) const { return piece_at(x).at(x); }

IntervalUnion PiecewiseEndo::image() const {
  std::vector<RatInterval> parts;
  for (const auto& p : pieces_) {
    if (p.slope == 0)
      parts.push_back(RatInterval::point(p.intercept));
    else
      parts.push_back(affine_image(p.domain, p.slope, p.intercept));
  }
  return IntervalUnion(std::move(parts));
}

std::optional<RatInterval> PiecewiseEndo::preimage(const Rat& v) const {
  std::optional<RatInterval> acc;
  auto add = [&](const RatInterval& i) {
    if (!acc) {
      acc = i;
      return;
    }
    acc = RatInterval(acc->lower(), acc->lower_closed(), i.upper(), i.upper_closed());
  };
  for (const auto& p : pieces_) {
    if (p.slope == 0) {
      if (p.intercept == v) add(p.domain);
    } else {
      Rat x = (v - p.intercept) / p.slope;
      if (p.domain.contains(x)) add(RatInterval::point(x));
    }
  }
  return acc;
}

EndoClass PiecewiseEndo::classify() const {
  EndoClass c;
  IntervalUnion im = image();
  c.constant = im.components().size() == 1 && im.components().front().is_point();
  c.injective = std::none_of(pieces_.begin(), pieces_.end(),
                             [](const Piece& p) { return p.slope == 0 && !p.domain.is_point(); });
  c.surjective = im == IntervalUnion::all();
  return c;
}

EndoClass classify(const PiecewiseEndo& f) { return f.classify(); }

std::vector<Piece> compose_pieces(const std::vector<Piece>& outer, const std::vector<Piece>& inner) {
  std::vector<Piece> out;
  for (const auto& g : inner) {
    if (g.slope == 0 || g.domain.is_point()) {
      Rat v = g.domain.is_point() ? g.at(g.domain.lower().value()) : g.intercept;
      for (const auto& f : outer) {
        if (f.domain.contains(v)) {
          out.push_back(Piece{g.domain, Rat(0), f.at(v)});
          break;
        }
      }
      continue;
    }
    RatInterval img = affine_image(g.domain, g.slope, g.intercept);
    for (const auto& f : outer) {
      auto common = intersect(img, f.domain);
      if (!common) continue;
      out.push_back(Piece{affine_preimage(*common, g.slope, g.intercept), g.slope * f.slope,
                          f.slope * g.intercept + f.intercept});
    }
  }
  return out;
}

PiecewiseEndo compose(const PiecewiseEndo& f, const PiecewiseEndo& g) {
  return PiecewiseEndo(compose_pieces(f.pieces(), g.pieces()));
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// "a*x + b", "a*x - b", "x", "a*x", or a bare constant.
std::pair<Rat, Rat> parse_affine(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw std::invalid_argument("missing formula");
  auto xpos = s.find('x');
  if (xpos == std::string::npos) return {Rat(0), parse_rat(s)};
  std::string coef = s.substr(0, xpos);
  Rat slope;
  if (coef.empty() || coef == "+")
    slope = 1;
  else if (coef == "-")
    slope = -1;
  else {
    if (coef.back() != '*') throw std::invalid_argument("expected '*' before x");
    slope = parse_rat(coef.substr(0, coef.size() - 1));
  }
  std::string rest = s.substr(xpos + 1);
  Rat intercept = 0;
  if (!rest.empty()) {
    if (rest[0] == '+')
      intercept = parse_rat(rest.substr(1));
    else if (rest[0] == '-')
      intercept = -parse_rat(rest.substr(1));
    else
      throw std::invalid_argument("unexpected text after x");
  }
  return {slope, intercept};
}

}  // namespace

PiecewiseEndo parse_piecewise(std::string_view text) {
  std::vector<Piece> pieces;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto close = line.find_first_of(")]");
    auto colon = close == std::string::npos ? std::string::npos : line.find(':', close);
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'interval : formula'");
    try {
      RatInterval dom = parse_interval(trim(line.substr(0, colon)));
      auto [slope, intercept] = parse_affine(line.substr(colon + 1));
      pieces.push_back(Piece{dom, slope, intercept});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  try {
    return PiecewiseEndo(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string to_string(const Piece& p) {
  std::string out = to_string(p.domain) + " : " + to_string(p.slope) + "*x ";
  if (p.intercept < 0)
    out += "- " + to_string(Rat(-p.intercept));
  else
    out += "+ " + to_string(p.intercept);
  return out;
}

std::string to_string(const PiecewiseEndo& f) {
  std::string out;
  for (const auto& p : f.pieces()) out += to_string(p) + "\n";
  return out;
}

Rat representative_point(const IntervalUnion& u) {
  std::optional<std::pair<Int, Rat>> best;
  auto consider = [&](const Rat& x) {
    Int idx = enum_index(x);
    if (!best || idx < best->first) best = std::make_pair(idx, x);
  };
  for (const auto& c : u.components())
    if (!c.is_point()) consider(simplest_between(c.lower(), c.upper()));
  if (!best)
    for (const auto& c : u.components()) consider(c.lower().value());
  if (!best) throw std::invalid_argument("representative_point of empty set");
  return best->second;
}

}  // namespace dlo
