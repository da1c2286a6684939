#include "dlo/ppair.hpp"

#include <map>
#include <stdexcept>

namespace dlo {

namespace {

class ClassCache {
 public:
  explicit ClassCache(GammaCert& cert) : cert_(cert) {}
  const Elem& of(const Rat& x) {
    auto it = memo_.find(x);
    if (it == memo_.end()) it = memo_.emplace(x, cert_.class_of(x)).first;
    return it->second;
  }
  std::optional<Rat> pre(const Rat& s) {
    auto it = pre_.find(s);
    if (it == pre_.end()) it = pre_.emplace(s, cert_.preimage(s)).first;
    return it->second;
  }

 private:
  GammaCert& cert_;
  std::map<Rat, Elem> memo_;
  std::map<Rat, std::optional<Rat>> pre_;
};

std::string pt(const Rat& x) { return to_string(x); }

}  // namespace

std::vector<Violation> p_check(GammaCert& cert, const PPair& p) {
  std::vector<Violation> out;
  if (!is_partial_automorphism(p.a)) out.push_back({0, "a is not a partial automorphism"});
  if (!is_partial_automorphism(p.b)) out.push_back({0, "b is not a partial automorphism"});
  if (!out.empty()) return out;

  ClassCache cls(cert);
  SpecPtr index = cert.index();
  auto bottom = index->min_element();
  auto top = index->max_element();
  auto red = [&](const Rat& x) { return cert.class_colour(cls.of(x)) == Colour::red; };

  for (const auto& [x, y] : p.a) {
    if (red(x) != red(y)) out.push_back({1, "colour changes at " + pt(x)});
    for (const auto& end : {bottom, top})
      if (end && ((cls.of(x) == *end) != (cls.of(y) == *end)))
        out.push_back({1, "endpoint class not preserved at " + pt(x)});
    for (const auto& [x2, y2] : p.a)
      if ((cls.of(x) == cls.of(x2)) != (cls.of(y) == cls.of(y2)))
        out.push_back({1, "classes of " + pt(x) + ", " + pt(x2) + " not preserved"});
  }
  for (const auto& [x, y] : p.a) {
    if (red(x) && !p.a.defined_at(cert.representative(cls.of(x))))
      out.push_back({2, "representative of the class of " + pt(x) + " missing from dom a"});
    if (red(y) && !p.a.image_contains(cert.representative(cls.of(y))))
      out.push_back({3, "representative of the class of " + pt(y) + " missing from im a"});
  }
  for (const auto& [u, v] : p.b) {
    if (!p.a.defined_at(cert.apply(u))) out.push_back({4, "g(" + pt(u) + ") not in dom a"});
    if (!p.a.image_contains(cert.apply(v))) out.push_back({5, "g(" + pt(v) + ") not in im a"});
  }
  for (const auto& [x, y] : p.a) {
    if (auto u = cls.pre(x)) {
      auto bu = p.b.at(*u);
      if (!bu)
        out.push_back({6, "g^-1(" + pt(x) + ") not in dom b"});
      else if (cert.apply(*bu) != y)
        out.push_back({6, "g b g^-1 differs from a at " + pt(x)});
    }
    if (auto v = cls.pre(y)) {
      auto bv = p.b.preimage(*v);
      if (!bv)
        out.push_back({7, "g^-1(" + pt(y) + ") not in im b"});
      else if (cert.apply(*bv) != x)
        out.push_back({7, "g b^-1 g^-1 differs from a^-1 at " + pt(y)});
    }
  }
  return out;
}

namespace {

struct ExtendState {
  CoordCertPtr cert;
  std::size_t k;
  std::shared_ptr<LazyIso> abar;
  std::map<Elem, std::vector<std::pair<Elem, Elem>>> seeds;
  std::map<Elem, std::shared_ptr<LazyIso>> tails;

  LazyIso& tail(const Elem& q) {
    auto it = tails.find(q);
    if (it == tails.end()) {
      auto s = seeds.find(q);
      std::vector<std::pair<Elem, Elem>> seed = s == seeds.end() ? std::vector<std::pair<Elem, Elem>>{} : s->second;
      if (cert->index()->colour(q) == Colour::red) seed.emplace_back(elem(Rat(0)), elem(Rat(0)));
      auto iso = std::make_shared<LazyIso>(full_q(), full_q(), seed, std::vector<ConstraintPtr>{},
                                           "alpha[" + to_string(q) + "]");
      it = tails.emplace(q, iso).first;
    }
    return *it->second;
  }

  Rat alpha(const Rat& z) {
    Elem c = cert->coords(z);
    Elem q = prefix(c, k);
    Elem q2 = abar->fwd(q);
    return cert->at(concat(q2, tail(q).fwd(suffix(c, k))));
  }

  Rat alpha_inv(const Rat& w) {
    Elem c = cert->coords(w);
    Elem q = abar->bwd(prefix(c, k));
    return cert->at(concat(q, tail(q).bwd(suffix(c, k))));
  }
};

}  // namespace

CommutingPair extend_pair(const CoordCertPtr& cert, const PPair& p) {
  auto violations = p_check(*cert, p);
  if (!violations.empty())
    throw std::invalid_argument("clause " + std::to_string(violations.front().clause) + ": " +
                                violations.front().detail);
  auto st = std::make_shared<ExtendState>();
  st->cert = cert;
  SpecPtr index = cert->index();
  st->k = index->arity();
  auto bottom = index->min_element();
  auto top = index->max_element();
  std::map<Elem, Elem> class_pairs;
  for (const auto& [x, y] : p.a) {
    Elem cx = cert->coords(x);
    Elem cy = cert->coords(y);
    Elem qx = prefix(cx, st->k);
    Elem qy = prefix(cy, st->k);
    st->seeds[qx].emplace_back(suffix(cx, st->k), suffix(cy, st->k));
    if (qx != bottom && qx != top) class_pairs.emplace(qx, qy);
  }
  std::vector<std::pair<Elem, Elem>> seed(class_pairs.begin(), class_pairs.end());
  st->abar = std::make_shared<LazyIso>(index, index, seed, std::vector<ConstraintPtr>{colour_preserving(index, index)},
                                       "abar");
  GeneralEndo alpha = GeneralEndo::lazy([st](const Rat& z) { return st->alpha(z); }, "alpha");
  GeneralEndo alpha_inv = GeneralEndo::lazy([st](const Rat& w) { return st->alpha_inv(w); }, "alpha^-1");
  GeneralEndo beta = GeneralEndo::lazy(
      [st](const Rat& x) {
        Rat s = st->alpha(st->cert->apply(x));
        auto pre = st->cert->preimage(s);
        if (!pre) throw std::logic_error("alpha moved an image point off the image");
        return *pre;
      },
      "g^-1 alpha g");
  return CommutingPair{alpha, beta, alpha_inv};
}

Recovery recover_witness(const CoordCertPtr& cert, const Rat& u, const Rat& s) {
  Recovery r;
  Rat gu = cert->apply(u);
  if (s == gu) {
    r.equal = true;
    return r;
  }
  bool up = s > gu;
  std::size_t k = cert->index()->arity();
  auto beyond = [&](const ExtRat& t, bool above) {
    Window w = above ? Window::open(elem(t), std::nullopt) : Window::open(std::nullopt, elem(t));
    return (*full_q()->least(w)).front();
  };
  if (auto pre = cert->preimage(s)) {
    r.recipe = 1;
    Rat v = *pre + (up ? 1 : -1);
    r.t = cert->apply(v);
    r.pair.a = FinitePartialMap({{gu, gu}, {s, r.t}});
    r.pair.b = FinitePartialMap({{u, u}, {*pre, v}});
  } else {
    Elem c = cert->coords(s);
    Elem q = prefix(c, k);
    ExtRat sigma = c.back();
    if (cert->class_colour(q) == Colour::blue) {
      r.recipe = 2;
      r.t = cert->at(concat(q, elem(beyond(sigma, true))));
      r.pair.a = FinitePartialMap({{gu, gu}, {s, r.t}});
      r.pair.b = FinitePartialMap({{u, u}});
    } else {
      r.recipe = 3;
      Rat rep = cert->representative(q);
      r.t = cert->at(concat(q, elem(beyond(sigma, sigma > ExtRat(0)))));
      Rat w = *cert->preimage(rep);
      r.pair.a = FinitePartialMap({{gu, gu}, {rep, rep}, {s, r.t}});
      r.pair.b = FinitePartialMap({{u, u}, {w, w}});
    }
  }
  r.witness = extend_pair(cert, r.pair);
  return r;
}

PPair random_ppair(const CoordCertPtr& cert, std::mt19937_64& rng, int classes) {
  SpecPtr index = cert->index();
  if (index->arity() != 1) throw std::invalid_argument("random_ppair needs a flat index");
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto small = [&]() { return make_rat(uniform(-10, 10), uniform(1, 10)); };
  static const Rat scales[] = {make_rat(1, 2), Rat(1), Rat(2)};

  std::set<Rat> qs;
  while (static_cast<int>(qs.size()) < classes) qs.insert(small());
  std::vector<std::pair<ExtRat, ExtRat>> class_map;
  int shift = 2 * uniform(-1, 1);
  for (const auto& q : qs) {
    class_map.emplace_back(q, Rat(q + shift));
    shift += 2 * uniform(0, 1);
  }
  if (auto lo = index->min_element()) class_map.emplace_back(lo->front(), lo->front());
  if (auto hi = index->max_element()) class_map.emplace_back(hi->front(), hi->front());

  PPair p;
  for (const auto& [q, q2] : class_map) {
    bool red = index->colour(elem(q)) == Colour::red;
    Rat scale = scales[uniform(0, 2)];
    Rat offset = red ? Rat(0) : Rat(uniform(-1, 1));
    std::set<Rat> ts;
    int n = uniform(1, 3);
    while (static_cast<int>(ts.size()) < n) {
      Rat t = small();
      if (t != 0) ts.insert(t);
    }
    if (red) ts.insert(0);
    for (const auto& t : ts) p.a.insert(cert->at(Elem{q, t}), cert->at(Elem{q2, Rat(scale * t + offset)}));
    if (red) p.b.insert(as_rat(cert->psi().bwd(elem(q))), as_rat(cert->psi().bwd(elem(q2))));
  }
  return p;
}

}  // namespace dlo
