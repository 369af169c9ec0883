#include "bipolar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bipolar {

namespace {

// Distance on [-1, 1]; the 0/0 case cannot occur since the denominator is >= 1.
double symmetric_unit_distance(double x, double y) noexcept {
  return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
}

template <typename Fn>
std::vector<std::vector<double>> lower_triangle(const BipolarFuzzySet& set, Fn fn) {
  std::vector<std::vector<double>> rows(set.size());
  for (std::size_t r = 0; r < set.size(); ++r) {
    rows[r].reserve(r);
    for (std::size_t c = 0; c < r; ++c) rows[r].push_back(fn(set[r].second, set[c].second));
  }
  return rows;
}

}  // namespace

std::string_view to_string(DistanceKind kind) noexcept {
  switch (kind) {
    case DistanceKind::PseudoHamming:
      return "ph";
    case DistanceKind::PseudoEuclid:
      return "pe";
    case DistanceKind::PseudoProb:
      return "pp";
  }
  return "pe";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view name) noexcept {
  for (DistanceKind kind : kAllDistanceKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Aggregation agg) noexcept {
  return agg == Aggregation::Mean ? "mean" : "max";
}

std::optional<Aggregation> parse_aggregation(std::string_view name) noexcept {
  if (name == "mean") return Aggregation::Mean;
  if (name == "max") return Aggregation::Max;
  return std::nullopt;
}

double plain_distance(double x, double y) noexcept { return std::abs(x - y); }

double interval_distance(const Interval& iv, double x, double y) {
  if (!(iv.lo < iv.hi)) throw DomainError("degenerate interval: lower bound must be below upper");
  if (!(x >= iv.lo && x <= iv.hi) || !(y >= iv.lo && y <= iv.hi)) {
    throw DomainError("interval_distance: point outside [" + std::to_string(iv.lo) + ", " +
                      std::to_string(iv.hi) + "]");
  }
  const double half_width = (iv.hi - iv.lo) / 2.0;
  const double mid = (iv.lo + iv.hi) / 2.0;
  return std::abs(x - y) / (half_width + std::max(std::abs(x - mid), std::abs(y - mid)));
}

double tau_distance(const TauOmega& v1, const TauOmega& v2) noexcept {
  return symmetric_unit_distance(v1.tau, v2.tau);
}

double omega_distance(const TauOmega& v1, const TauOmega& v2) noexcept {
  return symmetric_unit_distance(v1.omega, v2.omega);
}

double probabilistic_sum(double a, double b) noexcept { return a + b - a * b; }

double bipolar_distance(DistanceKind kind, const BipolarValue& x1,
                        const BipolarValue& x2) noexcept {
  const TauOmega v1 = to_tau_omega(x1);
  const TauOmega v2 = to_tau_omega(x2);
  switch (kind) {
    case DistanceKind::PseudoHamming: {
      const double num = std::abs(v1.tau - v2.tau) + std::abs(v1.omega - v2.omega);
      const double den = 1.0 + std::max(std::abs(v1.tau), std::abs(v2.tau)) +
                         std::max(std::abs(v1.omega), std::abs(v2.omega));
      return num / den;
    }
    case DistanceKind::PseudoEuclid:
      return std::hypot(tau_distance(v1, v2), omega_distance(v1, v2));
    case DistanceKind::PseudoProb:
      return probabilistic_sum(tau_distance(v1, v2), omega_distance(v1, v2));
  }
  return 0.0;
}

double bipolar_similarity(DistanceKind kind, const BipolarValue& x1,
                          const BipolarValue& x2) noexcept {
  return 1.0 - bipolar_distance(kind, x1, x2);
}

double fuzzy_distance(double mu1, double mu2) {
  if (!(mu1 >= 0.0 && mu1 <= 1.0) || !(mu2 >= 0.0 && mu2 <= 1.0)) {
    throw DomainError("fuzzy_distance: membership outside [0, 1]");
  }
  return 2.0 * std::abs(mu1 - mu2) /
         (1.0 + std::max(std::abs(2.0 * mu1 - 1.0), std::abs(2.0 * mu2 - 1.0)));
}

double set_distance(DistanceKind kind, const BipolarFuzzySet& a, const BipolarFuzzySet& b,
                    Aggregation aggregation) {
  require_same_universe(a, b);
  if (a.empty()) throw DomainError("set_distance: empty universe");

  double sum = 0.0;
  double worst = 0.0;
  for (const auto& [id, x] : a) {
    const double d = bipolar_distance(kind, x, b.at(id));
    sum += d;
    worst = std::max(worst, d);
  }
  return aggregation == Aggregation::Mean ? sum / static_cast<double>(a.size()) : worst;
}

std::vector<std::vector<double>> similarity_matrix(DistanceKind kind, const BipolarFuzzySet& set) {
  return lower_triangle(set, [kind](const BipolarValue& x, const BipolarValue& y) {
    return bipolar_similarity(kind, x, y);
  });
}

std::vector<std::vector<double>> distance_matrix(DistanceKind kind, const BipolarFuzzySet& set) {
  return lower_triangle(set, [kind](const BipolarValue& x, const BipolarValue& y) {
    return bipolar_distance(kind, x, y);
  });
}

}  // namespace bipolar
