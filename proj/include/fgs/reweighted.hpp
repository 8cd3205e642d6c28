#pragma once

#include "fgs/config.hpp"
#include "fgs/image.hpp"
#include "fgs/potential.hpp"
#include "fgs/smoother.hpp"
#include "fgs/weights.hpp"

namespace fgs {

// Fast IRLS: K rounds of WLS smoothing with weights w * psi'(Du) / (2 Du)
// evaluated at the previous iterate. Requires pot.has_irls_ratio().
SmoothResult firls(const Image& f, const EdgeWeights& w,
                   const SmootherConfig& cfg, const Potential& pot);

// Fast IRL1: K rounds of WTV smoothing with weights w * dpsi(|Du|) evaluated at
// the previous iterate. Requires pot.has_irl1_weight().
SmoothResult firl1(const Image& f, const EdgeWeights& w,
                   const SmootherConfig& cfg, const Potential& pot);

// Per-edge surrogate weights of a single-channel iterate u.
EdgeWeights irls_weights(const Image& u, const EdgeWeights& w,
                         const Potential& pot);
EdgeWeights irl1_weights(const Image& u, const EdgeWeights& w,
                         const Potential& pot);

// Dispatches on cfg.prior (kFirls / kFirl1 use cfg.potential).
SmoothResult run(const Image& f, const EdgeWeights& w,
                 const SmootherConfig& cfg);

}  // namespace fgs
