#include "dlo/actions.hpp"

#include "dlo/endo_ops.hpp"
#include "dlo/random_maps.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dlo {

std::size_t LabelledForest::add_node(std::string id, std::optional<std::size_t> parent, unsigned label) {
  if (id.empty() || id == "-") throw std::invalid_argument("bad node id '" + id + "'");
  if (find(id)) throw std::invalid_argument("duplicate node id '" + id + "'");
  if (parent) {
    if (*parent >= nodes_.size()) throw std::invalid_argument("unknown parent of '" + id + "'");
    if (nodes_[*parent].label >= label)
      throw std::invalid_argument("label of '" + id + "' does not exceed its parent's");
  } else if (label != 0) {
    throw std::invalid_argument("root '" + id + "' must be labelled 0");
  }
  nodes_.push_back({std::move(id), parent, label});
  return nodes_.size() - 1;
}

std::vector<std::size_t> LabelledForest::children(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].parent == n) out.push_back(i);
  return out;
}

std::optional<std::size_t> LabelledForest::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::size_t> LabelledForest::ancestry(std::size_t n) const {
  std::vector<std::size_t> out{n};
  while (auto p = nodes_.at(out.back()).parent) out.push_back(*p);
  return out;
}

bool LabelledForest::is_ancestor_or_self(std::size_t a, std::size_t n) const {
  auto chain = ancestry(n);
  return std::find(chain.begin(), chain.end(), a) != chain.end();
}

LabelledForest parse_forest(std::string_view text) {
  LabelledForest t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string id, parent, label, extra;
    if (!(ls >> id)) continue;
    if (!(ls >> parent >> label) || (ls >> extra)) throw ParseError(line_no, "expected 'id parent_id label'");
    if (label.empty() || !std::all_of(label.begin(), label.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        label.size() > 9)
      throw ParseError(line_no, "bad label '" + label + "'");
    std::optional<std::size_t> p;
    if (parent != "-") {
      p = t.find(parent);
      if (!p) throw ParseError(line_no, "unknown parent '" + parent + "'");
    }
    try {
      t.add_node(id, p, static_cast<unsigned>(std::stoul(label)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return t;
}

std::string to_string(const LabelledForest& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto p = t.parent(i);
    out += t.id(i) + " " + (p ? t.id(*p) : std::string("-")) + " " + std::to_string(t.label(i)) + "\n";
  }
  return out;
}

std::optional<std::size_t> inadmissible_node(const LabelledForest& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.label(i) < 2) continue;
    for (auto c : t.children(i))
      if (t.label(c) != t.label(i) + 1) return i;
  }
  return std::nullopt;
}

OrbitPoint make_point(const LabelledForest& t, std::size_t node, std::vector<Rat> set) {
  if (node >= t.size()) throw std::invalid_argument("no such node");
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.size() != t.label(node))
    throw std::invalid_argument("node '" + t.id(node) + "' needs a set of size " + std::to_string(t.label(node)));
  return OrbitPoint{node, std::move(set)};
}

std::string to_string(const LabelledForest& t, const OrbitPoint& p) {
  std::string out = "(" + t.id(p.node) + ", {";
  for (std::size_t i = 0; i < p.set.size(); ++i) out += (i ? ", " : "") + to_string(p.set[i]);
  return out + "})";
}

namespace {

std::set<Rat> image_of(const GeneralEndo& f, const std::vector<Rat>& b) {
  std::set<Rat> out;
  for (const auto& x : b) out.insert(f(x));
  return out;
}

}  // namespace

OrbitPoint act(const LabelledForest& t, const GeneralEndo& f, const OrbitPoint& p) {
  std::set<Rat> img = image_of(f, p.set);
  std::size_t target = p.node;
  for (auto a : t.ancestry(p.node)) {
    target = a;
    if (t.label(a) <= img.size()) break;
  }
  std::vector<Rat> b(img.begin(), img.end());
  b.resize(t.label(target));
  return OrbitPoint{target, std::move(b)};
}

bool containment_check(const LabelledForest& t, const GeneralEndo& f, const OrbitPoint& p) {
  std::set<Rat> img = image_of(f, p.set);
  OrbitPoint q = act(t, f, p);
  return std::all_of(q.set.begin(), q.set.end(), [&](const Rat& c) { return img.count(c) != 0; });
}

ActionReport verify_action(const LabelledForest& t, const std::vector<GeneralEndo>& fs,
                           const std::vector<OrbitPoint>& points) {
  ActionReport r;
  const GeneralEndo id = PiecewiseEndo::identity();
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };
  for (const auto& p : points) {
    ++r.checks;
    if (act(t, id, p) != p) fail("identity moves " + to_string(t, p));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& p : points) {
      OrbitPoint q = act(t, fs[i], p);
      r.checks += 3;
      if (!containment_check(t, fs[i], p)) fail("containment: map " + std::to_string(i) + " at " + to_string(t, p));
      if (!t.is_ancestor_or_self(q.node, p.node))
        fail("ascent: map " + std::to_string(i) + " at " + to_string(t, p));
      std::set<Rat> img = image_of(fs[i], p.set);
      if (img.size() == p.set.size() &&
          (q.node != p.node || q.set != std::vector<Rat>(img.begin(), img.end())))
        fail("rank-preserving map " + std::to_string(i) + " changes orbit at " + to_string(t, p));
    }
    for (std::size_t j = 0; j < fs.size(); ++j) {
      GeneralEndo fg = compose(fs[i], fs[j]);
      for (const auto& p : points) {
        ++r.checks;
        OrbitPoint lhs = act(t, fg, p);
        OrbitPoint rhs = act(t, fs[i], act(t, fs[j], p));
        if (lhs != rhs)
          fail("composition: maps " + std::to_string(i) + " after " + std::to_string(j) + " at " + to_string(t, p) +
               " give " + to_string(t, lhs) + " vs " + to_string(t, rhs));
      }
    }
  }
  return r;
}

PiecewiseEndo fixpoint_check(const LabelledForest& t, const OrbitPoint& p) {
  PiecewiseEndo h = p.set.empty() ? PiecewiseEndo::constant(0)
                                  : idempotent_with_image(std::set<Rat>(p.set.begin(), p.set.end()));
  if (act(t, h, p) != p) throw std::logic_error("stabilizing map moves " + to_string(t, p));
  return h;
}

LabelledForest random_forest(std::mt19937_64& rng, std::size_t nodes, unsigned max_label) {
  LabelledForest t;
  t.add_node("r0", std::nullopt, 0);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  while (t.size() < nodes) {
    std::size_t n = t.size();
    std::string id = "n" + std::to_string(n);
    if (pick(0, 5) == 0) {
      t.add_node(id, std::nullopt, 0);
      continue;
    }
    std::size_t parent = pick(0, n - 1);
    unsigned l = t.label(parent);
    if (l >= max_label) continue;
    unsigned child = l >= 2 ? l + 1 : static_cast<unsigned>(pick(l + 1, max_label));
    t.add_node(id, parent, child);
  }
  return t;
}

OrbitPoint random_point(std::mt19937_64& rng, const LabelledForest& t, int height) {
  std::size_t node = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
  std::set<Rat> b;
  while (b.size() < t.label(node)) b.insert(random_rat(rng, height));
  return OrbitPoint{node, std::vector<Rat>(b.begin(), b.end())};
}

}  // namespace dlo
