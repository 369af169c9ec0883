#pragma once

// Distances on a bounded interval and between bipolar values.
//
// On [a, b] the distance between x and y is
//
//   |x - y| / ((b - a)/2 + max(|x - m|, |y - m|)),   m = (a + b)/2,
//
// which, unlike |x - y|, is not shift invariant: pairs near the middle of the
// interval are farther apart than equally spaced pairs near an end. Example
// on [0, 1]:
//
//   interval_distance({0, 1}, 0.0, 0.2) == 0.2
//   interval_distance({0, 1}, 0.4, 0.6) == 1.0 / 3.0
//   plain_distance(0.0, 0.2) == plain_distance(0.4, 0.6)   // both 0.2
//
// Bipolar distances apply the [-1, 1] form to the polar coordinates tau and
// omega and combine the two partial distances.

#include <optional>
#include <string_view>
#include <vector>

#include "bipolar/algebra.hpp"
#include "bipolar/kernel.hpp"

namespace bipolar {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

enum class DistanceKind { PseudoHamming, PseudoEuclid, PseudoProb };

inline constexpr DistanceKind kAllDistanceKinds[] = {
    DistanceKind::PseudoHamming, DistanceKind::PseudoEuclid, DistanceKind::PseudoProb};

/// Short names "ph", "pe", "pp".
std::string_view to_string(DistanceKind kind) noexcept;
std::optional<DistanceKind> parse_distance_kind(std::string_view name) noexcept;

enum class Aggregation { Mean, Max };

std::string_view to_string(Aggregation agg) noexcept;
std::optional<Aggregation> parse_aggregation(std::string_view name) noexcept;

/// |x - y|, shift invariant.
double plain_distance(double x, double y) noexcept;

/// Throws DomainError when lo >= hi or either point is outside [lo, hi].
double interval_distance(const Interval& iv, double x, double y);

double tau_distance(const TauOmega& v1, const TauOmega& v2) noexcept;
double omega_distance(const TauOmega& v1, const TauOmega& v2) noexcept;

/// Probabilistic sum a + b - ab.
double probabilistic_sum(double a, double b) noexcept;

double bipolar_distance(DistanceKind kind, const BipolarValue& x1, const BipolarValue& x2) noexcept;
double bipolar_similarity(DistanceKind kind, const BipolarValue& x1,
                          const BipolarValue& x2) noexcept;

/// Distance for fuzzy values (nu = 1 - mu), where all three kinds coincide.
/// Throws DomainError outside [0, 1].
double fuzzy_distance(double mu1, double mu2);

/// Mean or max of the elementwise distances.
/// Throws UniverseMismatch or DomainError (empty universe).
double set_distance(DistanceKind kind, const BipolarFuzzySet& a, const BipolarFuzzySet& b,
                    Aggregation aggregation = Aggregation::Mean);

/// Lower triangle without the diagonal: row k holds the similarities of
/// element k to elements 0 .. k-1, so row 0 is empty.
std::vector<std::vector<double>> similarity_matrix(DistanceKind kind, const BipolarFuzzySet& set);
std::vector<std::vector<double>> distance_matrix(DistanceKind kind, const BipolarFuzzySet& set);

}  // namespace bipolar
