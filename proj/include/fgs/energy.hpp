#pragma once

#include "fgs/image.hpp"
#include "fgs/potential.hpp"
#include "fgs/weights.hpp"

namespace fgs {

// sum_p (u - f)_p^2 + lambda * sum_j sum_p w_{j,p} psi((D_j u)_p), summed over
// channels, with forward differences and no term past the last column/row.
double energy(const Image& u, const Image& f, const EdgeWeights& w,
              double lambda, const Potential& pot);

}  // namespace fgs
