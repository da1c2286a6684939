#pragma once

#include "dlo/rat.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlo {

class MapConflict : public std::runtime_error {
 public:
  MapConflict(const Rat& at, const std::string& what) : std::runtime_error(what), at_(at) {}
  const Rat& at() const { return at_; }

 private:
  Rat at_;
};

// Finite functional set of (x, y) pairs over the rationals, sorted by x.
class FinitePartialMap {
 public:
  FinitePartialMap() = default;
  // Throws MapConflict if two pairs share a first coordinate with different values.
  FinitePartialMap(std::initializer_list<std::pair<Rat, Rat>> pairs);
  explicit FinitePartialMap(const std::vector<std::pair<Rat, Rat>>& pairs);

  // Adds (x, y); throws MapConflict if x already maps elsewhere.
  void insert(const Rat& x, const Rat& y);

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  bool defined_at(const Rat& x) const { return pairs_.count(x) != 0; }
  std::optional<Rat> at(const Rat& x) const;
  std::vector<Rat> domain() const;
  std::vector<Rat> image() const;
  bool image_contains(const Rat& y) const;
  std::optional<Rat> preimage(const Rat& y) const;

  const std::map<Rat, Rat>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const FinitePartialMap&, const FinitePartialMap&) = default;

 private:
  std::map<Rat, Rat> pairs_;
};

bool is_injective(const FinitePartialMap& m);
bool is_partial_automorphism(const FinitePartialMap& m);

FinitePartialMap merge(const FinitePartialMap& m1, const FinitePartialMap& m2);
// Throws std::invalid_argument when m is not injective.
FinitePartialMap inverse(const FinitePartialMap& m);

// "x -> y, x' -> y'" with pairs in domain order; "{}" for the empty map.
std::string to_string(const FinitePartialMap& m);
FinitePartialMap parse_partial_map(std::string_view text);

}  // namespace dlo
