#include "dlo/gamma_build.hpp"

#include <map>
#include <stdexcept>

namespace dlo {

namespace {

// A block is a non-singleton class of the image of f: a hole of the image
// together with the image point it is attached to, if any. Finite ends of
// blocks are always closed.
struct Block {
  RatInterval span;
  std::optional<Rat> attached;
  ExtRat head;  // designated index in the class order of g o f
  SpecPtr inner;  // class order of g inside the block
};

SpecPtr block_order(const RatInterval& b) {
  FlatSpec::Options o;
  o.coloured = true;
  if (b.is_point()) {
    o.support = IntervalUnion({RatInterval::point(0)});
    o.name = "{0}";
    return std::make_shared<FlatSpec>(std::move(o));
  }
  o.with_neg_inf = true;
  o.with_pos_inf = true;
  o.neg_inf_colour = b.bounded_below() ? Colour::red : Colour::blue;
  o.pos_inf_colour = b.bounded_above() ? Colour::red : Colour::blue;
  o.name = std::string(b.bounded_below() ? "{red}" : "{blue}") + " + Q2 + " + (b.bounded_above() ? "{red}" : "{blue}");
  return std::make_shared<FlatSpec>(std::move(o));
}

class AbsorbedCert : public GammaCert {
 public:
  AbsorbedCert(CoordCertPtr g, ImageEmbedding f, SpecPtr index, std::vector<Block> blocks)
      : g_(std::move(g)), f_(std::move(f)), index_(std::move(index)) {
    for (auto& b : blocks) blocks_.emplace(b.head, std::move(b));
  }

  SpecPtr index() const override { return index_; }
  Rat apply(const Rat& x) override { return g_->apply(f_.map(x)); }
  Elem class_of(const Rat& z) override { return prefix(g_->class_of(z), 1); }

  Rat representative(const Elem& q) override {
    if (index_->colour(q) != Colour::red) throw std::invalid_argument("blue class has no representative");
    auto it = blocks_.find(q.front());
    if (it != blocks_.end()) return g_->apply(*it->second.attached);
    return g_->representative(Elem{q.front(), Rat(0)});
  }

  Rat member(const Elem& q) override {
    auto it = blocks_.find(q.front());
    if (it != blocks_.end()) return g_->member(concat(q, *it->second.inner->least(Window::everything())));
    return g_->member(Elem{q.front(), Rat(0)});
  }

  Rat member_above(const Elem&, const Rat& y) override { return g_->member_above(g_->class_of(y), y); }

  std::optional<Rat> preimage(const Rat& s) override {
    auto x = g_->preimage(s);
    if (!x || !f_.image.contains(*x)) return std::nullopt;
    return f_.inverse(*x);
  }

  std::string describe() const override { return "(" + g_->describe() + ") o " + f_.label; }
  std::string dump() const override { return g_->dump(); }

 private:
  CoordCertPtr g_;
  ImageEmbedding f_;
  SpecPtr index_;
  std::map<ExtRat, Block> blocks_;
};

}  // namespace

Absorbed absorb(const ImageEmbedding& f) {
  const IntervalUnion& a = f.image;
  if (a.empty()) throw std::invalid_argument("empty image");
  const IntervalUnion holes = a.complement();
  std::vector<RatInterval> parts = holes.components();
  for (const auto& h : holes.components()) {
    if (h.bounded_below() && !h.lower_closed()) parts.push_back(RatInterval::point(h.lower().value()));
    if (h.bounded_above() && !h.upper_closed()) parts.push_back(RatInterval::point(h.upper().value()));
  }
  bool bottom = a.components().front().bounded_below();
  bool top = a.components().back().bounded_above();
  Variant v = variant_of(bottom, top);
  SpecPtr i3 = ext_coloured_q(bottom, top);

  std::vector<Block> blocks;
  long bounded = 0;
  const IntervalUnion spans(parts);
  for (const auto& span : spans.components()) {
    Block b{span, std::nullopt, ExtRat(), block_order(span)};
    IntervalUnion inside = a.intersect(IntervalUnion({span}));
    if (!inside.empty()) b.attached = inside.components().front().lower().value();
    if (!span.bounded_below())
      b.head = ExtRat::neg_inf();
    else if (!span.bounded_above())
      b.head = ExtRat::pos_inf();
    else
      b.head = Rat(2 * bounded++ + (b.attached ? 0 : 1));
    blocks.push_back(b);
  }

  std::map<ExtRat, SpecPtr> inner;
  for (const auto& b : blocks) inner.emplace(b.head, b.inner);
  SpecPtr dummy = single_point(0);
  SpecPtr ig = std::make_shared<ProductSpec>(
      i3, 1,
      [inner, dummy](const Elem& h) {
        auto it = inner.find(h.front());
        return it == inner.end() ? dummy : it->second;
      },
      "I_g");

  const long m = static_cast<long>(blocks.size());
  auto shared_blocks = std::make_shared<std::vector<Block>>(blocks);
  RegionMap source{
      [shared_blocks, m](const Elem& e) -> long {
        const Rat& x = as_rat(e);
        for (long j = 0; j < m; ++j) {
          const RatInterval& s = (*shared_blocks)[j].span;
          if (s.contains(x)) {
            if (s.is_point()) return 4 * j + 2;
            if (s.bounded_below() && s.lower().value() == x) return 4 * j + 1;
            if (s.bounded_above() && s.upper().value() == x) return 4 * j + 3;
            return 4 * j + 2;
          }
          if (ExtRat(x) < s.lower()) return 4 * j;
        }
        return 4 * m;
      },
      [shared_blocks, m](long label) -> Window {
        long j = label / 4;
        const auto& bs = *shared_blocks;
        switch (label % 4) {
          case 0:
            return Window::open(j > 0 ? std::optional<Elem>(elem(bs[j - 1].span.upper())) : std::nullopt,
                                j < m ? std::optional<Elem>(elem(bs[j].span.lower())) : std::nullopt);
          case 1: return Window::point(elem(bs[j].span.lower()));
          case 3: return Window::point(elem(bs[j].span.upper()));
          default:
            if (bs[j].span.is_point()) return Window::point(elem(bs[j].span.lower()));
            return Window::open(elem(bs[j].span.lower()), elem(bs[j].span.upper()));
        }
      }};
  RegionMap target{
      [shared_blocks, m](const Elem& e) -> long {
        const ExtRat& s = e[0];
        long below = 0;
        for (long j = 0; j < m; ++j) {
          const ExtRat& d = (*shared_blocks)[j].head;
          if (d == s) {
            if (e[1].is_neg_inf()) return 4 * j + 1;
            if (e[1].is_pos_inf()) return 4 * j + 3;
            return 4 * j + 2;
          }
          if (d < s) below = j + 1;
        }
        return 4 * below;
      },
      [shared_blocks, m](long label) -> Window {
        long j = label / 4;
        const auto& bs = *shared_blocks;
        auto at = [&](long k, const ExtRat& t) { return Elem{bs[k].head, t}; };
        switch (label % 4) {
          case 0:
            return Window::open(j > 0 ? std::optional<Elem>(at(j - 1, ExtRat::pos_inf())) : std::nullopt,
                                j < m ? std::optional<Elem>(at(j, ExtRat::neg_inf())) : std::nullopt);
          case 1: return Window::point(at(j, ExtRat::neg_inf()));
          case 3: return Window::point(at(j, ExtRat::pos_inf()));
          default: return Window::open(at(j, ExtRat::neg_inf()), at(j, ExtRat::pos_inf()));
        }
      }};

  auto g_cert = std::make_shared<CoordCert>(ig, std::vector<ConstraintPtr>{preserves_regions("blocks", source, target)},
                                            std::string("absorb-") + to_string(v));
  CertPtr gf_cert = std::make_shared<AbsorbedCert>(g_cert, f, i3, blocks);
  return Absorbed{v, g_cert, gf_cert, g_cert->as_endo(g_cert), gf_cert->as_endo(gf_cert)};
}

Absorbed absorb(const PiecewiseEndo& f) { return absorb(embedding_of(f)); }

}  // namespace dlo
