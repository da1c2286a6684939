#pragma once

#include "dlo/general_endo.hpp"
#include "dlo/piecewise.hpp"
#include "dlo/rat.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dlo {

// Finite forest with natural-number labels strictly increasing away from the
// roots. Every root is labelled 0, so every descent has a target.
class LabelledForest {
 public:
  // Parents must already be present. Throws std::invalid_argument.
  std::size_t add_node(std::string id, std::optional<std::size_t> parent, unsigned label);

  std::size_t size() const { return nodes_.size(); }
  const std::string& id(std::size_t n) const { return nodes_.at(n).id; }
  unsigned label(std::size_t n) const { return nodes_.at(n).label; }
  std::optional<std::size_t> parent(std::size_t n) const { return nodes_.at(n).parent; }
  std::vector<std::size_t> children(std::size_t n) const;
  std::optional<std::size_t> find(std::string_view id) const;
  // n, its parent, ..., its root.
  std::vector<std::size_t> ancestry(std::size_t n) const;
  bool is_ancestor_or_self(std::size_t a, std::size_t n) const;

 private:
  struct Node {
    std::string id;
    std::optional<std::size_t> parent;
    unsigned label;
  };
  std::vector<Node> nodes_;
};

// Lines "id parent_id label", '-' for roots, '#' comments. Throws ParseError.
LabelledForest parse_forest(std::string_view text);
std::string to_string(const LabelledForest& t);

// A node whose children do not all carry label + 1 although its own label is
// at least 2. Collapsing maps then break the composition law.
std::optional<std::size_t> inadmissible_node(const LabelledForest& t);

struct OrbitPoint {
  std::size_t node = 0;
  std::vector<Rat> set;  // strictly increasing, size = label(node)

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

// Sorts and deduplicates; throws std::invalid_argument on a size mismatch.
OrbitPoint make_point(const LabelledForest& t, std::size_t node, std::vector<Rat> set);
std::string to_string(const LabelledForest& t, const OrbitPoint& p);

OrbitPoint act(const LabelledForest& t, const GeneralEndo& f, const OrbitPoint& p);

struct ActionReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Identity law on every point and composition law on every ordered pair of
// maps and every point; also containment, same-node and descent checks.
ActionReport verify_action(const LabelledForest& t, const std::vector<GeneralEndo>& fs,
                           const std::vector<OrbitPoint>& points);

// The acted set lies inside f(B).
bool containment_check(const LabelledForest& t, const GeneralEndo& f, const OrbitPoint& p);

// Idempotent with image B fixing p; for rank 0 the constant 0. Throws
// std::logic_error if the map does not fix p.
PiecewiseEndo fixpoint_check(const LabelledForest& t, const OrbitPoint& p);

// Admissible random forest with at most `nodes` nodes and labels <= max_label.
LabelledForest random_forest(std::mt19937_64& rng, std::size_t nodes, unsigned max_label = 5);
OrbitPoint random_point(std::mt19937_64& rng, const LabelledForest& t, int height = 4);

}  // namespace dlo
