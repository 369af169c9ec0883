#pragma once

// Value types for bipolar fuzzy degrees and the penta-valued decomposition.
//
// A bipolar value carries two independent degrees in [0, 1]: membership mu
// and non-membership nu. Its penta-valued form splits the unit mass into
// truth t, falsity f, unknownness u, contradiction c and ambiguity i with
//
//   t = (mu - nu)+        f = (nu - mu)+
//   c = (mu + nu - 1)+    u = (1 - mu - nu)+
//   i = 1 - |mu - nu| - |mu + nu - 1|
//
// so that t + f + u + c + i = 1, t * f = 0 and u * c = 0. The polar form
// (tau, omega) = (t - f, c - u) satisfies |tau| + |omega| <= 1.

#include <optional>
#include <string_view>

#include "bipolar/error.hpp"

namespace bipolar {

/// Tolerance for every invariant assertion (partition of unity, class bands, ...).
inline constexpr double kEpsilon = 1e-9;

class BipolarValue {
 public:
  /// Throws DomainError unless both degrees lie in [0, 1]. No clamping.
  constexpr BipolarValue(double mu, double nu) : mu_(mu), nu_(nu) {
    if (!(mu >= 0.0 && mu <= 1.0) || !(nu >= 0.0 && nu <= 1.0)) {
      throw DomainError("bipolar degrees must lie in [0, 1]");
    }
  }

  constexpr double mu() const noexcept { return mu_; }
  constexpr double nu() const noexcept { return nu_; }

  /// Index of uncertainty 1 - mu - nu; empty for paraconsistent values.
  std::optional<double> uncertainty() const noexcept;
  /// Index of contradiction mu + nu - 1; empty for intuitionistic values.
  std::optional<double> contradiction() const noexcept;

  friend constexpr bool operator==(const BipolarValue&, const BipolarValue&) = default;

 private:
  double mu_;
  double nu_;
};

namespace landmarks {
inline constexpr BipolarValue kTrue{1.0, 0.0};
inline constexpr BipolarValue kFalse{0.0, 1.0};
inline constexpr BipolarValue kUnknown{0.0, 0.0};
inline constexpr BipolarValue kContradictory{1.0, 1.0};
inline constexpr BipolarValue kAmbiguous{0.5, 0.5};
}  // namespace landmarks

struct PentaValue {
  double t = 0.0;
  double f = 0.0;
  double u = 0.0;
  double c = 0.0;
  double i = 0.0;

  /// Partition of unity, sign exclusivity and unit range, all within `tol`.
  bool is_consistent(double tol = kEpsilon) const noexcept;
};

struct TauOmega {
  double tau = 0.0;
  double omega = 0.0;
};

enum class ValueClass { Fuzzy, Intuitionistic, Paraconsistent, GeneralBipolar };

std::string_view to_string(ValueClass cls) noexcept;

PentaValue to_penta(const BipolarValue& x) noexcept;

/// Inverse transform mu = t + c + i/2, nu = f + c + i/2.
/// Throws DomainError when `p` is not a consistent decomposition.
BipolarValue from_penta(const PentaValue& p);

TauOmega to_tau_omega(const PentaValue& p) noexcept;
TauOmega to_tau_omega(const BipolarValue& x) noexcept;

/// Splits tau and omega into their positive and negative parts; ambiguity takes the rest.
/// Throws DomainError when |tau| + |omega| > 1 + kEpsilon.
PentaValue from_tau_omega(const TauOmega& v);

/// Fuzzy when |mu + nu - 1| <= kEpsilon, else Intuitionistic or Paraconsistent.
/// Never returns GeneralBipolar.
ValueClass classify(const BipolarValue& x) noexcept;

/// Evaluates the class-specialized closed forms (three-valued for fuzzy,
/// tetra-valued for intuitionistic and paraconsistent values).
/// Throws DomainError if `x` does not satisfy the constraint of `cls`.
/// GeneralBipolar falls through to to_penta.
PentaValue reduced_penta(const BipolarValue& x, ValueClass cls);

}  // namespace bipolar
