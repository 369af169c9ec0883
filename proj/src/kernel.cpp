#include "bipolar/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace bipolar {

namespace {

double positive_part(double a) { return std::max(a, 0.0); }

double clamp_unit(double a) { return std::clamp(a, 0.0, 1.0); }

}  // namespace

std::optional<double> BipolarValue::uncertainty() const noexcept {
  const double pi = 1.0 - mu_ - nu_;
  if (pi < -kEpsilon) return std::nullopt;
  return std::max(pi, 0.0);
}

std::optional<double> BipolarValue::contradiction() const noexcept {
  const double kappa = mu_ + nu_ - 1.0;
  if (kappa < -kEpsilon) return std::nullopt;
  return std::max(kappa, 0.0);
}

bool PentaValue::is_consistent(double tol) const noexcept {
  for (double v : {t, f, u, c, i}) {
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) return false;
  }
  return std::abs(t + f + u + c + i - 1.0) <= tol && std::abs(t * f) <= tol &&
         std::abs(u * c) <= tol;
}

std::string_view to_string(ValueClass cls) noexcept {
  switch (cls) {
    case ValueClass::Fuzzy:
      return "fuzzy";
    case ValueClass::Intuitionistic:
      return "intuitionistic";
    case ValueClass::Paraconsistent:
      return "paraconsistent";
    case ValueClass::GeneralBipolar:
      return "bipolar";
  }
  return "bipolar";
}

PentaValue to_penta(const BipolarValue& x) noexcept {
  const double mu = x.mu();
  const double nu = x.nu();
  return PentaValue{
      .t = positive_part(mu - nu),
      .f = positive_part(nu - mu),
      .u = positive_part(1.0 - mu - nu),
      .c = positive_part(mu + nu - 1.0),
      .i = 1.0 - std::abs(mu - nu) - std::abs(mu + nu - 1.0),
  };
}

BipolarValue from_penta(const PentaValue& p) {
  if (!p.is_consistent()) {
    throw DomainError("inconsistent penta-valued decomposition");
  }
  // Consistent inputs map into [0, 1] up to rounding drift.
  return BipolarValue(clamp_unit(p.t + p.c + p.i / 2.0), clamp_unit(p.f + p.c + p.i / 2.0));
}

TauOmega to_tau_omega(const PentaValue& p) noexcept {
  return TauOmega{.tau = p.t - p.f, .omega = p.c - p.u};
}

TauOmega to_tau_omega(const BipolarValue& x) noexcept { return to_tau_omega(to_penta(x)); }

PentaValue from_tau_omega(const TauOmega& v) {
  const double mass = std::abs(v.tau) + std::abs(v.omega);
  if (!std::isfinite(mass) || mass > 1.0 + kEpsilon) {
    throw DomainError("|tau| + |omega| must not exceed 1");
  }
  return PentaValue{
      .t = positive_part(v.tau),
      .f = positive_part(-v.tau),
      .u = positive_part(-v.omega),
      .c = positive_part(v.omega),
      .i = positive_part(1.0 - mass),
  };
}

ValueClass classify(const BipolarValue& x) noexcept {
  const double excess = x.mu() + x.nu() - 1.0;
  if (std::abs(excess) <= kEpsilon) return ValueClass::Fuzzy;
  return excess < 0.0 ? ValueClass::Intuitionistic : ValueClass::Paraconsistent;
}

PentaValue reduced_penta(const BipolarValue& x, ValueClass cls) {
  const double mu = x.mu();
  const double nu = x.nu();
  const double excess = mu + nu - 1.0;
  switch (cls) {
    case ValueClass::Fuzzy: {
      if (std::abs(excess) > kEpsilon) throw DomainError("value is not fuzzy (mu + nu != 1)");
      return PentaValue{
          .t = positive_part(2.0 * mu - 1.0),
          .f = positive_part(1.0 - 2.0 * mu),
          .u = 0.0,
          .c = 0.0,
          .i = 1.0 - std::abs(2.0 * mu - 1.0),
      };
    }
    case ValueClass::Intuitionistic: {
      if (excess > kEpsilon) throw DomainError("value is not intuitionistic (mu + nu > 1)");
      return PentaValue{
          .t = positive_part(mu - nu),
          .f = positive_part(nu - mu),
          .u = 1.0 - mu - nu,
          .c = 0.0,
          .i = mu + nu - std::abs(mu - nu),
      };
    }
    case ValueClass::Paraconsistent: {
      if (excess < -kEpsilon) throw DomainError("value is not paraconsistent (mu + nu < 1)");
      return PentaValue{
          .t = positive_part(mu - nu),
          .f = positive_part(nu - mu),
          .u = 0.0,
          .c = mu + nu - 1.0,
          .i = 2.0 - std::abs(mu - nu) - mu - nu,
      };
    }
    case ValueClass::GeneralBipolar:
      break;
  }
  return to_penta(x);
}

}  // namespace bipolar
