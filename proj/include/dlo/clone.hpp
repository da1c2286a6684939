#pragma once

#include "dlo/general_endo.hpp"
#include "dlo/piecewise.hpp"
#include "dlo/topology.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dlo {

// u o pi_j of arity n, or the bare projection when there is no unary part.
// Positions are 1-based.
class FinitaryOp {
 public:
  static FinitaryOp projection(std::size_t arity, std::size_t j);
  static FinitaryOp composed(GeneralEndo unary, std::size_t arity, std::size_t j);

  std::size_t arity() const { return arity_; }
  std::size_t position() const { return j_; }
  const std::optional<GeneralEndo>& unary() const { return unary_; }
  Rat operator()(const std::vector<Rat>& args) const;
  std::string describe() const;

 private:
  FinitaryOp(std::size_t arity, std::size_t j, std::optional<GeneralEndo> unary);

  std::size_t arity_;
  std::size_t j_;
  std::optional<GeneralEndo> unary_;
};

// f o (g_1, ..., g_n). Throws std::invalid_argument on arity mismatch.
FinitaryOp clone_compose(const FinitaryOp& f, const std::vector<FinitaryOp>& gs);

// A finitary operation tabulated on grid^arity. Rows are in lexicographic
// order of argument tuples, first position most significant.
class GridOp {
 public:
  // Throws std::invalid_argument unless the table has |grid|^arity entries.
  GridOp(std::vector<Rat> grid, std::size_t arity, std::vector<Rat> table);
  static GridOp tabulate(std::vector<Rat> grid, std::size_t arity, const std::function<Rat(const std::vector<Rat>&)>& f);
  static GridOp of(const FinitaryOp& op, std::vector<Rat> grid);

  std::size_t arity() const { return arity_; }
  const std::vector<Rat>& grid() const { return grid_; }
  const std::vector<Rat>& table() const { return table_; }
  std::size_t rows() const { return table_.size(); }
  std::vector<Rat> row(std::size_t r) const;
  // Throws std::out_of_range off the grid.
  Rat operator()(const std::vector<Rat>& args) const;

  friend bool operator==(const GridOp&, const GridOp&) = default;

 private:
  std::vector<Rat> grid_;
  std::size_t arity_;
  std::vector<Rat> table_;
};

// "grid: 0 1" followed by rows "x_1 ... x_n : value". Throws ParseError.
GridOp parse_grid_op(std::string_view text);
std::string to_string(const GridOp& op);

// Two value-changing single-position moves at positions i < j:
// f(a) != f(a with a' at i) and f(b) != f(b with b' at j).
struct RhoWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Rat> a, a_moved, b, b_moved;
};

struct RhoResult {
  bool preserves = true;
  std::optional<RhoWitness> witness;
};

RhoResult preserves_rho(const GridOp& op);
std::set<std::size_t> essential_positions(const GridOp& op);

struct Reconstruction {
  std::size_t position = 1;
  std::map<Rat, Rat> unary;  // u(x) = op(x, ..., x)
};

// op = u o pi_i on the grid, if some position works.
std::optional<Reconstruction> reconstruct_unary(const GridOp& op);

enum class IdentityOutcome { holds, hypothesis_false, violated };
std::string to_string(IdentityOutcome o);

// If f and f2 agree on the product of the images of hs, then
// f o (h_1 pi_1, ..., h_n pi_n) and f2 o (...) agree on `samples` enumerated
// n-tuples. Each h_i must have a finite image inside the grid; throws
// std::invalid_argument otherwise.
IdentityOutcome tuple_compose_identity(const GridOp& f, const GridOp& f2, const std::vector<PiecewiseEndo>& hs,
                                       std::size_t samples = 200);

struct LiftReport {
  bool hypothesis = true;          // d(f_n, f) <= 2^-n for every n <= N
  std::vector<Distance> unary;     // d(f_n, f)
  std::vector<Int> modulus;        // m(n): k-ary bound implied by agreement on e(0..n-1)
  std::vector<Distance> lifted;    // d_k(f_n pi_j, f pi_j)
  bool bounds_hold = true;         // lifted[n] <= 2^-modulus[n] wherever the hypothesis holds
};

LiftReport lift_convergence(const std::function<PiecewiseEndo(std::size_t)>& fs, const PiecewiseEndo& f,
                            std::size_t j, std::size_t k, std::size_t n, std::uint64_t depth = kDefaultDepth);

// Mixture of unary-through-one-position tables, perturbed ones and random tables.
GridOp random_grid_op(std::mt19937_64& rng, const std::vector<Rat>& grid, std::size_t arity);

}  // namespace dlo
