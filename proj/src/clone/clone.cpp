#include "dlo/clone.hpp"

#include "dlo/enumeration.hpp"
#include "dlo/random_maps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dlo {

FinitaryOp::FinitaryOp(std::size_t arity, std::size_t j, std::optional<GeneralEndo> unary)
    : arity_(arity), j_(j), unary_(std::move(unary)) {
  if (arity == 0) throw std::invalid_argument("arity must be at least 1");
  if (j < 1 || j > arity) throw std::invalid_argument("position out of range");
}

FinitaryOp FinitaryOp::projection(std::size_t arity, std::size_t j) { return FinitaryOp(arity, j, std::nullopt); }

FinitaryOp FinitaryOp::composed(GeneralEndo unary, std::size_t arity, std::size_t j) {
  return FinitaryOp(arity, j, std::move(unary));
}

Rat FinitaryOp::operator()(const std::vector<Rat>& args) const {
  if (args.size() != arity_) throw std::invalid_argument("wrong number of arguments");
  const Rat& x = args[j_ - 1];
  return unary_ ? (*unary_)(x) : x;
}

std::string FinitaryOp::describe() const {
  std::string pi = "pi_" + std::to_string(j_) + "^" + std::to_string(arity_);
  return unary_ ? "(" + unary_->describe() + ") o " + pi : pi;
}

FinitaryOp clone_compose(const FinitaryOp& f, const std::vector<FinitaryOp>& gs) {
  if (gs.size() != f.arity()) throw std::invalid_argument("clone_compose: need one inner operation per position");
  for (const auto& g : gs)
    if (g.arity() != gs.front().arity()) throw std::invalid_argument("clone_compose: inner arities differ");
  const FinitaryOp& inner = gs[f.position() - 1];
  if (!f.unary()) return inner;
  if (!inner.unary()) return FinitaryOp::composed(*f.unary(), inner.arity(), inner.position());
  return FinitaryOp::composed(compose(*f.unary(), *inner.unary()), inner.arity(), inner.position());
}

GridOp::GridOp(std::vector<Rat> grid, std::size_t arity, std::vector<Rat> table)
    : grid_(std::move(grid)), arity_(arity), table_(std::move(table)) {
  if (arity == 0) throw std::invalid_argument("arity must be at least 1");
  std::sort(grid_.begin(), grid_.end());
  if (grid_.empty() || std::adjacent_find(grid_.begin(), grid_.end()) != grid_.end())
    throw std::invalid_argument("grid must be a nonempty set");
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity; ++i) rows *= grid_.size();
  if (table_.size() != rows) throw std::invalid_argument("table needs " + std::to_string(rows) + " rows");
}

GridOp GridOp::tabulate(std::vector<Rat> grid, std::size_t arity, const std::function<Rat(const std::vector<Rat>&)>& f) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity; ++i) rows *= grid.size();
  GridOp shape(grid, arity, std::vector<Rat>(rows));
  std::vector<Rat> table;
  table.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) table.push_back(f(shape.row(r)));
  return GridOp(std::move(grid), arity, std::move(table));
}

GridOp GridOp::of(const FinitaryOp& op, std::vector<Rat> grid) {
  return tabulate(std::move(grid), op.arity(), [&](const std::vector<Rat>& x) { return op(x); });
}

std::vector<Rat> GridOp::row(std::size_t r) const {
  std::vector<Rat> out(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    out[i] = grid_[r % grid_.size()];
    r /= grid_.size();
  }
  return out;
}

Rat GridOp::operator()(const std::vector<Rat>& args) const {
  if (args.size() != arity_) throw std::invalid_argument("wrong number of arguments");
  std::size_t r = 0;
  for (const auto& x : args) {
    auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
    if (it == grid_.end() || *it != x) throw std::out_of_range(to_string(x) + " is off the grid");
    r = r * grid_.size() + static_cast<std::size_t>(it - grid_.begin());
  }
  return table_[r];
}

GridOp parse_grid_op(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::vector<Rat>> grid;
  std::map<std::vector<Rat>, Rat> rows;
  std::size_t arity = 0;
  auto parse_list = [&](const std::string& s) {
    std::istringstream ls(s);
    std::vector<Rat> out;
    std::string tok;
    while (ls >> tok) {
      try {
        out.push_back(parse_rat(tok));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!grid) {
      auto colon = line.find(':');
      if (colon == std::string::npos || line.substr(0, colon).find("grid") == std::string::npos)
        throw ParseError(line_no, "expected 'grid: ...'");
      grid = parse_list(line.substr(colon + 1));
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'args : value'");
    auto args = parse_list(line.substr(0, colon));
    auto value = parse_list(line.substr(colon + 1));
    if (args.empty() || value.size() != 1) throw ParseError(line_no, "expected 'args : value'");
    if (arity == 0) arity = args.size();
    if (args.size() != arity) throw ParseError(line_no, "row has the wrong arity");
    for (const auto& x : args)
      if (std::find(grid->begin(), grid->end(), x) == grid->end()) throw ParseError(line_no, "argument off the grid");
    if (!rows.emplace(args, value.front()).second) throw ParseError(line_no, "duplicate row");
  }
  if (!grid || arity == 0) throw ParseError(line_no, "missing grid or rows");
  try {
    GridOp shape = GridOp::tabulate(*grid, arity, [](const std::vector<Rat>&) { return Rat(0); });
    if (rows.size() != shape.rows()) throw ParseError(line_no, "table is not total on the grid");
    return GridOp::tabulate(*grid, arity, [&](const std::vector<Rat>& x) { return rows.at(x); });
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string to_string(const GridOp& op) {
  std::string out = "grid:";
  for (const auto& g : op.grid()) out += " " + to_string(g);
  out += "\n";
  for (std::size_t r = 0; r < op.rows(); ++r) {
    auto x = op.row(r);
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? " " : "") + to_string(x[i]);
    out += " : " + to_string(op.table()[r]) + "\n";
  }
  return out;
}

namespace {

// For each position, a single-position move changing the value, if any.
std::vector<std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>> moves(const GridOp& op) {
  std::vector<std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>> out(op.arity());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    auto x = op.row(r);
    for (std::size_t i = 0; i < op.arity(); ++i) {
      if (out[i]) continue;
      for (const auto& g : op.grid()) {
        auto y = x;
        y[i] = g;
        if (op(y) != op.table()[r]) {
          out[i] = std::make_pair(x, y);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::set<std::size_t> essential_positions(const GridOp& op) {
  std::set<std::size_t> out;
  auto m = moves(op);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.insert(i + 1);
  return out;
}

// rho fails iff two value-changing pairs of argument tuples differ in
// disjoint sets of positions; those pairs form the violating columns.
RhoResult preserves_rho(const GridOp& op) {
  std::set<unsigned long> masks;
  for (std::size_t r = 0; r < op.rows(); ++r) {
    auto x = op.row(r);
    for (std::size_t s = r + 1; s < op.rows(); ++s) {
      if (op.table()[r] == op.table()[s]) continue;
      auto y = op.row(s);
      unsigned long m = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) m |= 1UL << i;
      masks.insert(m);
    }
  }
  bool violated = false;
  for (auto a = masks.begin(); a != masks.end() && !violated; ++a)
    for (auto b = a; b != masks.end() && !violated; ++b) violated = (*a & *b) == 0;
  if (!violated) return {};
  auto m = moves(op);
  std::vector<std::size_t> ess;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) ess.push_back(i);
  if (ess.size() < 2) throw std::logic_error("rho violated with fewer than two essential positions");
  RhoWitness w;
  w.i = ess[0] + 1;
  w.j = ess[1] + 1;
  std::tie(w.a, w.a_moved) = *m[ess[0]];
  std::tie(w.b, w.b_moved) = *m[ess[1]];
  return RhoResult{false, std::move(w)};
}

std::optional<Reconstruction> reconstruct_unary(const GridOp& op) {
  Reconstruction rec;
  for (const auto& g : op.grid()) rec.unary[g] = op(std::vector<Rat>(op.arity(), g));
  for (std::size_t i = 1; i <= op.arity(); ++i) {
    bool ok = true;
    for (std::size_t r = 0; r < op.rows() && ok; ++r) ok = op.table()[r] == rec.unary.at(op.row(r)[i - 1]);
    if (ok) {
      rec.position = i;
      return rec;
    }
  }
  return std::nullopt;
}

std::string to_string(IdentityOutcome o) {
  switch (o) {
    case IdentityOutcome::holds: return "holds";
    case IdentityOutcome::hypothesis_false: return "hypothesis false";
    case IdentityOutcome::violated: return "violated";
  }
  return "?";
}

IdentityOutcome tuple_compose_identity(const GridOp& f, const GridOp& f2, const std::vector<PiecewiseEndo>& hs,
                                       std::size_t samples) {
  if (f.arity() != f2.arity() || hs.size() != f.arity() || f.grid() != f2.grid())
    throw std::invalid_argument("tuple_compose_identity: shapes differ");
  std::vector<std::vector<Rat>> images;
  for (const auto& h : hs) {
    std::vector<Rat> img;
    const IntervalUnion im = h.image();
    for (const auto& c : im.components()) {
      if (!c.is_point()) throw std::invalid_argument("tuple_compose_identity: image not finite");
      const Rat& v = c.lower().value();
      if (!std::binary_search(f.grid().begin(), f.grid().end(), v))
        throw std::invalid_argument("tuple_compose_identity: image not in grid");
      img.push_back(v);
    }
    images.push_back(std::move(img));
  }
  // Odometer over the product of the images.
  std::vector<std::size_t> at(images.size(), 0);
  for (bool more = true; more;) {
    std::vector<Rat> x;
    for (std::size_t i = 0; i < at.size(); ++i) x.push_back(images[i][at[i]]);
    if (f(x) != f2(x)) return IdentityOutcome::hypothesis_false;
    more = false;
    for (std::size_t i = at.size(); i-- > 0;) {
      if (++at[i] < images[i].size()) {
        more = true;
        break;
      }
      at[i] = 0;
    }
  }
  UltraMetricContext ctx(f.arity(), samples);
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = ctx.tuple(Int(s));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = hs[i](x[i]);
    if (f(x) != f2(x)) return IdentityOutcome::violated;
  }
  return IdentityOutcome::holds;
}

LiftReport lift_convergence(const std::function<PiecewiseEndo(std::size_t)>& fs, const PiecewiseEndo& f,
                            std::size_t j, std::size_t k, std::size_t n, std::uint64_t depth) {
  if (j < 1 || j > k) throw std::invalid_argument("lift_convergence: position out of range");
  LiftReport rep;
  UltraMetricContext ctx(k, depth);
  FinitaryOp g = FinitaryOp::composed(f, k, j);
  for (std::size_t i = 0; i <= n; ++i) {
    PiecewiseEndo fi = fs(i);
    Distance du = dist_exact(fi, f);
    bool hyp = within(du, Int(i));
    rep.hypothesis = rep.hypothesis && hyp;
    std::vector<Int> coords(k, Int(0));
    coords[j - 1] = Int(i);
    Int m = ctx.index_of(coords);
    FinitaryOp gi = FinitaryOp::composed(fi, k, j);
    Distance dk = dist_scan(ctx, [&](const std::vector<Rat>& x) { return gi(x); },
                            [&](const std::vector<Rat>& x) { return g(x); });
    if (hyp && !within(dk, m)) rep.bounds_hold = false;
    rep.unary.push_back(du);
    rep.modulus.push_back(m);
    rep.lifted.push_back(dk);
  }
  return rep;
}

GridOp random_grid_op(std::mt19937_64& rng, const std::vector<Rat>& grid, std::size_t arity) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::size_t mode = pick(3);
  std::size_t pos = pick(arity);
  std::map<Rat, Rat> u;
  for (const auto& g : grid) u[g] = grid[pick(grid.size())];
  GridOp op = GridOp::tabulate(grid, arity, [&](const std::vector<Rat>& x) {
    return mode == 2 ? grid[pick(grid.size())] : u.at(x[pos]);
  });
  if (mode != 1) return op;
  auto table = op.table();
  table[pick(table.size())] = grid[pick(grid.size())];
  return GridOp(op.grid(), arity, std::move(table));
}

}  // namespace dlo
