#include "fgs/potential.hpp"

#include <algorithm>
#include <cmath>

#include "fgs/errors.hpp"

namespace fgs {

Potential Potential::welsch(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw ParameterError("Welsch sigma must be positive");
  return Potential(Kind::kWelsch, sigma);
}

Potential Potential::power(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("power p must be in (0, 1)");
  return Potential(Kind::kPower, p);
}

std::string Potential::name() const {
  switch (kind_) {
    case Kind::kQuadratic: return "quadratic";
    case Kind::kAbs: return "abs";
    case Kind::kWelsch: return "welsch(" + std::to_string(param_) + ")";
    case Kind::kLogAbs: return "log-abs";
    case Kind::kPower: return "power(" + std::to_string(param_) + ")";
  }
  return "unknown";
}

double Potential::value(double tau) const noexcept {
  const double a = std::abs(tau);
  switch (kind_) {
    case Kind::kQuadratic: return tau * tau;
    case Kind::kAbs: return a;
    case Kind::kWelsch: return param_ * -std::expm1(-tau * tau / param_);
    case Kind::kLogAbs: return std::log1p(a);
    case Kind::kPower: return std::pow(a, param_);
  }
  return 0.0;
}

double Potential::irls_ratio(double tau) const {
  switch (kind_) {
    case Kind::kQuadratic: return 1.0;
    case Kind::kWelsch: return std::exp(-tau * tau / param_);
    default:
      throw ParameterError("potential " + name() +
                           " has no finite IRLS weight at zero");
  }
}

double Potential::irl1_weight(double tau) const {
  const double a = std::abs(tau);
  switch (kind_) {
    case Kind::kAbs: return 1.0;
    case Kind::kLogAbs: return 1.0 / (1.0 + a);
    case Kind::kPower:
      if (a == 0.0) return 1.0 / kPowerEpsilon;
      return std::min(param_ * std::pow(a, param_ - 1.0), 1.0 / kPowerEpsilon);
    default:
      throw ParameterError("potential " + name() +
                           " is not concave in |tau|; no IRL1 weight");
  }
}

}  // namespace fgs
