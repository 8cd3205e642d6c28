#include "fgs/config.hpp"

#include <cmath>
#include <string>

#include "fgs/errors.hpp"

namespace fgs {

const char* prior_name(Prior prior) noexcept {
  switch (prior) {
    case Prior::kWls: return "wls";
    case Prior::kWtv: return "wtv";
    case Prior::kFirls: return "firls";
    case Prior::kFirl1: return "firl1";
  }
  return "?";
}

void SmootherConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ParameterError(msg);
  };
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
  require(std::isfinite(kappa) && kappa > 0.0, "kappa must be > 0");
  require(std::isfinite(alpha) && alpha > 1.0, "alpha must be > 1");
  require(std::isfinite(beta1) && beta1 > 0.0, "beta1 must be > 0");
  require(iters_T >= 1, "T must be >= 1");
  require(iters_K >= 1, "K must be >= 1");
  if (prior == Prior::kFirls)
    require(potential.has_irls_ratio(),
            "FIRLS needs a potential with a finite IRLS weight");
  if (prior == Prior::kFirl1)
    require(potential.has_irl1_weight(),
            "FIRL1 needs a concave potential with an IRL1 weight");
}

}  // namespace fgs
