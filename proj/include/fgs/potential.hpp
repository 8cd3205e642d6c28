#pragma once

#include <string>

namespace fgs {

// Potential psi(tau) penalising a finite difference tau.
//
//   Quadratic   tau^2
//   Abs         |tau|
//   Welsch      sigma * (1 - exp(-tau^2 / sigma))
//   LogAbs      log(1 + |tau|)
//   Power       |tau|^p, 0 < p < 1
//
// irls_ratio(tau) = psi'(tau) / (2 tau) is the quadratic-majorizer weight; it
// has a finite limit at 0 only for Quadratic and Welsch. irl1_weight(tau) is
// the magnitude of the subgradient at |tau|, used to linearize the concave
// potentials (Abs, LogAbs, Power).
class Potential {
 public:
  enum class Kind { kQuadratic, kAbs, kWelsch, kLogAbs, kPower };

  static Potential quadratic() { return Potential(Kind::kQuadratic, 0.0); }
  static Potential abs() { return Potential(Kind::kAbs, 0.0); }
  static Potential welsch(double sigma);
  static Potential log_abs() { return Potential(Kind::kLogAbs, 0.0); }
  static Potential power(double p);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  std::string name() const;

  double value(double tau) const noexcept;

  bool has_irls_ratio() const noexcept {
    return kind_ == Kind::kQuadratic || kind_ == Kind::kWelsch;
  }
  bool has_irl1_weight() const noexcept {
    return kind_ == Kind::kAbs || kind_ == Kind::kLogAbs ||
           kind_ == Kind::kPower;
  }

  // Throw ParameterError when the corresponding has_* is false.
  double irls_ratio(double tau) const;
  double irl1_weight(double tau) const;

  // Lower clamp on |tau| for the Power subgradient.
  static constexpr double kPowerEpsilon = 1e-4;

 private:
  Potential(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

}  // namespace fgs
