#pragma once

#include "fgs/potential.hpp"

namespace fgs {

enum class Prior { kWls, kWtv, kFirls, kFirl1 };

const char* prior_name(Prior prior) noexcept;

// Defaults follow the published validation setup: beta1 = 1, alpha = 4,
// T = 5, lambda = 400, kappa = 7.65 for samples in [0, 255].
struct SmootherConfig {
  double lambda = 400.0;
  double kappa = 7.65;
  double alpha = 4.0;    // penalty growth per iteration, > 1
  double beta1 = 1.0;    // initial penalty, > 0
  int iters_T = 5;       // internal (splitting) iterations
  int iters_K = 5;       // external (re-weighting) iterations
  Prior prior = Prior::kWls;
  Potential potential = Potential::quadratic();  // used by kFirls / kFirl1

  // Throws ParameterError. lambda = 0 is accepted and yields the identity.
  void validate() const;
};

}  // namespace fgs
