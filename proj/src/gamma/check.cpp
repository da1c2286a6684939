#include "dlo/enumeration.hpp"
#include "dlo/gamma_build.hpp"

#include <algorithm>
#include <map>

namespace dlo {

CertCheck check_certificate(GammaCert& cert, std::mt19937_64& rng, std::size_t samples, std::size_t pairs) {
  CertCheck out;
  auto fail = [&](std::string what) {
    if (out.failures.size() < 20) out.failures.push_back(std::move(what));
  };
  auto expect = [&](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) fail(what);
  };
  SpecPtr index = cert.index();
  auto coloured = [&](Colour c) { return [index, c](const Elem& e) { return index->colour(e) == c; }; };

  std::vector<Rat> xs;
  for (std::uint64_t i = 0; i < samples; ++i) xs.push_back(enumerate(i));
  std::sort(xs.begin(), xs.end());
  std::vector<Rat> ys;
  std::vector<Elem> classes;
  std::map<Elem, Rat> seen;
  for (const auto& x : xs) {
    Rat y = cert.apply(x);
    if (!ys.empty()) expect(ys.back() < y, "not strictly increasing at " + to_string(x));
    Elem q = cert.class_of(y);
    expect(cert.class_colour(q) == Colour::red, "image point " + to_string(y) + " in a blue class");
    expect(cert.representative(q) == y, "representative of the class of " + to_string(y) + " differs");
    auto pre = cert.preimage(y);
    expect(pre && *pre == x, "preimage of g(" + to_string(x) + ") wrong");
    auto [it, fresh] = seen.emplace(q, x);
    expect(fresh, "g(" + to_string(x) + ") and g(" + to_string(it->second) + ") share a class");
    ys.push_back(y);
    classes.push_back(q);
  }

  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  for (std::size_t n = 0; n < pairs; ++n) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const Elem& qa = classes[i];
    const Elem& qb = classes[j];
    auto blue = index->least(Window::open(qa, qb), coloured(Colour::blue));
    expect(blue.has_value(), "no blue class between " + to_string(qa) + " and " + to_string(qb));
    if (blue) {
      Rat m = cert.member(*blue);
      expect(ys[i] < m && m < ys[j], "blue member outside the pair");
      expect(cert.class_of(m) == *blue, "blue member in the wrong class");
      expect(!cert.preimage(m), "blue member is an image point");
    }
    auto red = index->least(Window::open(qa, qb), coloured(Colour::red));
    expect(red.has_value(), "no red class between " + to_string(qa) + " and " + to_string(qb));
    if (red) {
      Rat r = cert.representative(*red);
      expect(ys[i] < r && r < ys[j], "red representative outside the pair");
      expect(cert.class_of(r) == *red, "red representative in the wrong class");
    }
  }

  std::vector<Rat> zs = xs;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) zs.push_back((ys[i] + ys[i + 1]) / 2);
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  std::optional<Elem> prev;
  for (const auto& z : zs) {
    Elem q = cert.class_of(z);
    if (prev) expect(*prev <= q, "class order decreases at " + to_string(z));
    prev = q;
  }

  Variant v = cert.variant();
  Rat lowest = ys.front();
  Rat highest = ys.back();
  if (has_top(v)) {
    Elem t = *index->max_element();
    Rat m = cert.member(t);
    expect(cert.class_colour(t) == Colour::blue, "top class not blue");
    expect(highest < m && cert.class_of(m) == t, "image not below the top class");
  } else {
    for (Rat z : {Rat(highest + 1), Rat(1000), Rat(1000000)}) {
      auto r = index->least(Window::open(cert.class_of(z), std::nullopt), coloured(Colour::red));
      expect(r && cert.representative(*r) > z, "image bounded above near " + to_string(z));
    }
  }
  if (has_bottom(v)) {
    Elem b = *index->min_element();
    Rat m = cert.member(b);
    expect(cert.class_colour(b) == Colour::blue, "bottom class not blue");
    expect(m < lowest && cert.class_of(m) == b, "image not above the bottom class");
  } else {
    for (Rat z : {Rat(lowest - 1), Rat(-1000), Rat(-1000000)}) {
      auto r = index->least(Window::open(std::nullopt, cert.class_of(z)), coloured(Colour::red));
      expect(r && cert.representative(*r) < z, "image bounded below near " + to_string(z));
    }
  }
  return out;
}

}  // namespace dlo
