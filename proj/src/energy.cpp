#include "fgs/energy.hpp"

#include "fgs/errors.hpp"

namespace fgs {

double energy(const Image& u, const Image& f, const EdgeWeights& w,
              double lambda, const Potential& pot) {
  if (!u.same_shape(f)) throw DimensionError("energy: u and f differ in shape");
  if (!w.matches(u)) throw DimensionError("energy: weights do not match image");
  const int W = u.width(), H = u.height();
  double data = 0.0, prior = 0.0;
  for (int c = 0; c < u.channels(); ++c) {
    for (int y = 0; y < H; ++y) {
      for (int x = 0; x < W; ++x) {
        const double r = u.at(x, y, c) - f.at(x, y, c);
        data += r * r;
        if (x + 1 < W)
          prior += w.h(x, y) * pot.value(u.at(x + 1, y, c) - u.at(x, y, c));
        if (y + 1 < H)
          prior += w.v(x, y) * pot.value(u.at(x, y + 1, c) - u.at(x, y, c));
      }
    }
  }
  return data + lambda * prior;
}

}  // namespace fgs
