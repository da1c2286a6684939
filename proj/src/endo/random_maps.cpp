#include "dlo/random_maps.hpp"

#include <set>

namespace dlo {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(std::mt19937_64& rng, int percent) { return uniform(rng, 0, 99) < percent; }

Rat positive_step(std::mt19937_64& rng) {
  static const Rat steps[] = {make_rat(1, 3), make_rat(1, 2), Rat(1), Rat(2), Rat(3)};
  return steps[uniform(rng, 0, 4)];
}

}  // namespace

Rat random_rat(std::mt19937_64& rng, int height) {
  return make_rat(uniform(rng, -height, height), uniform(rng, 1, height));
}

PiecewiseEndo random_piecewise(std::mt19937_64& rng, MapKind kind, int max_pieces, int height) {
  if (kind == MapKind::constant) return PiecewiseEndo::constant(random_rat(rng, height));
  int m = uniform(rng, 1, max_pieces);
  std::set<Rat> cuts;
  while (static_cast<int>(cuts.size()) < m - 1) cuts.insert(random_rat(rng, height));
  std::vector<Rat> bs(cuts.begin(), cuts.end());

  bool jumps = kind == MapKind::any || kind == MapKind::injective;
  auto slope_for = [&](int i) -> Rat {
    bool end = i == 0 || i == m - 1;
    if (kind == MapKind::any && chance(rng, 30)) return 0;
    if (kind == MapKind::surjective && !end && chance(rng, 40)) return 0;
    return positive_step(rng);
  };
  auto jump = [&]() -> Rat { return jumps && chance(rng, 50) ? positive_step(rng) : Rat(0); };

  std::vector<Piece> pieces;
  Rat slope = slope_for(0);
  Rat intercept = random_rat(rng, height);
  bool lower_closed = false;
  ExtRat lower = ExtRat::neg_inf();
  for (int i = 0; i < m; ++i) {
    if (i == m - 1) {
      pieces.push_back(Piece{RatInterval(lower, lower_closed, ExtRat::pos_inf(), false), slope, intercept});
      break;
    }
    const Rat& b = bs[i];
    Rat left_value = slope * b + intercept;
    int mode = uniform(rng, 0, 4);  // 0,1: left closed; 2,3: right closed; 4: point piece
    Rat next_slope = slope_for(i + 1);
    Rat next_value;
    if (mode == 4) {
      pieces.push_back(Piece{RatInterval(lower, lower_closed, b, false), slope, intercept});
      Rat v = left_value + jump();
      pieces.push_back(Piece{RatInterval::point(b), 0, v});
      next_value = v + jump();
      lower_closed = false;
    } else {
      bool left_closed = mode < 2;
      pieces.push_back(Piece{RatInterval(lower, lower_closed, b, left_closed), slope, intercept});
      next_value = left_value + jump();
      lower_closed = !left_closed;
    }
    lower = b;
    slope = next_slope;
    intercept = next_value - next_slope * b;
  }
  return PiecewiseEndo(std::move(pieces));
}

}  // namespace dlo
