#include "dlo/partial_map.hpp"

#include <set>

namespace dlo {

FinitePartialMap::FinitePartialMap(std::initializer_list<std::pair<Rat, Rat>> pairs) {
  for (const auto& [x, y] : pairs) insert(x, y);
}

FinitePartialMap::FinitePartialMap(const std::vector<std::pair<Rat, Rat>>& pairs) {
  for (const auto& [x, y] : pairs) insert(x, y);
}

void FinitePartialMap::insert(const Rat& x, const Rat& y) {
  auto [it, fresh] = pairs_.emplace(x, y);
  if (!fresh && it->second != y)
    throw MapConflict(x, "conflicting values at " + to_string(x) + ": " + to_string(it->second) + " and " +
                             to_string(y));
}

std::optional<Rat> FinitePartialMap::at(const Rat& x) const {
  auto it = pairs_.find(x);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rat> FinitePartialMap::domain() const {
  std::vector<Rat> out;
  for (const auto& kv : pairs_) out.push_back(kv.first);
  return out;
}

std::vector<Rat> FinitePartialMap::image() const {
  std::set<Rat> s;
  for (const auto& kv : pairs_) s.insert(kv.second);
  return {s.begin(), s.end()};
}

bool FinitePartialMap::image_contains(const Rat& y) const { return preimage(y).has_value(); }

std::optional<Rat> FinitePartialMap::preimage(const Rat& y) const {
  for (const auto& kv : pairs_)
    if (kv.second == y) return kv.first;
  return std::nullopt;
}

bool is_injective(const FinitePartialMap& m) {
  std::set<Rat> seen;
  for (const auto& kv : m)
    if (!seen.insert(kv.second).second) return false;
  return true;
}

bool is_partial_automorphism(const FinitePartialMap& m) {
  const Rat* prev = nullptr;
  for (const auto& kv : m) {
    if (prev && !(*prev < kv.second)) return false;
    prev = &kv.second;
  }
  return true;
}

FinitePartialMap merge(const FinitePartialMap& m1, const FinitePartialMap& m2) {
  FinitePartialMap out = m1;
  for (const auto& [x, y] : m2) out.insert(x, y);
  return out;
}

FinitePartialMap inverse(const FinitePartialMap& m) {
  FinitePartialMap out;
  for (const auto& [x, y] : m) {
    if (out.defined_at(y)) throw std::invalid_argument("inverse of a non-injective map (value " + to_string(y) + ")");
    out.insert(y, x);
  }
  return out;
}

std::string to_string(const FinitePartialMap& m) {
  if (m.empty()) return "{}";
  std::string s;
  for (const auto& [x, y] : m) {
    if (!s.empty()) s += ", ";
    s += to_string(x) + " -> " + to_string(y);
  }
  return s;
}

FinitePartialMap parse_partial_map(std::string_view text) {
  FinitePartialMap out;
  std::string body(text);
  if (body.find_first_not_of(" \t") == std::string::npos || body == "{}") return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto arrow = item.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("pair without '->': '" + item + "'");
    out.insert(parse_rat(item.substr(0, arrow)), parse_rat(item.substr(arrow + 2)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace dlo
