#pragma once

// Cardinality and entropy of bipolar values and finite bipolar fuzzy sets.
//
// The similarity-derived measures are closed forms in the penta-valued
// indexes: n(x) = s(x, T) and e(x) = 2 min(d(x, T), d(x, F)) for the
// pseudo-Hamming, pseudo-Euclidean and pseudo-probabilistic distances.
// The remaining kinds are the classic intuitionistic measures restated in
// penta-valued form. Entropies are not confined to [0, 1]: e(U) reaches
// sqrt(2), 4/3 and 3/2 for the three similarity-derived kinds.

#include <array>
#include <optional>
#include <string_view>

#include "bipolar/algebra.hpp"
#include "bipolar/kernel.hpp"

namespace bipolar {

enum class CardinalityKind { FromPE, FromPH, FromPP, ClassicMin, ClassicMed, ClassicMax };

inline constexpr CardinalityKind kAllCardinalityKinds[] = {
    CardinalityKind::FromPE,     CardinalityKind::FromPH,     CardinalityKind::FromPP,
    CardinalityKind::ClassicMin, CardinalityKind::ClassicMed, CardinalityKind::ClassicMax};

enum class EntropyKind {
  FromPE,
  FromPH,
  FromPP,
  SzmidtKacprzyk,
  SzmidtKacprzykPi,
  BustinceBurillo,
  GrzegorzewskiMrowkaVector,
};

inline constexpr EntropyKind kAllEntropyKinds[] = {
    EntropyKind::FromPE,          EntropyKind::FromPH,
    EntropyKind::FromPP,          EntropyKind::SzmidtKacprzyk,
    EntropyKind::SzmidtKacprzykPi, EntropyKind::BustinceBurillo,
    EntropyKind::GrzegorzewskiMrowkaVector};

/// Reduction of the two-component vector entropy to a scalar.
enum class VectorNorm { Max, Sum };

/// "pe", "ph", "pp", "min", "med", "max".
std::string_view to_string(CardinalityKind kind) noexcept;
std::optional<CardinalityKind> parse_cardinality_kind(std::string_view name) noexcept;
/// "pe", "ph", "pp", "sk", "skpi", "bb", "gm".
std::string_view to_string(EntropyKind kind) noexcept;
std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept;
std::string_view to_string(VectorNorm norm) noexcept;
std::optional<VectorNorm> parse_vector_norm(std::string_view name) noexcept;

bool is_classic(CardinalityKind kind) noexcept;

struct EntropyResult {
  double scalar = 0.0;
  /// (1 - t - f, u + c); only for GrzegorzewskiMrowkaVector.
  std::optional<std::array<double, 2>> vector;
};

/// Classic kinds throw DomainError on paraconsistent input (mu + nu > 1 + kEpsilon).
double cardinality_point(CardinalityKind kind, const BipolarValue& x);
double cardinality_set(CardinalityKind kind, const BipolarFuzzySet& set);
/// card(X) - n(A) - n(A^c)
double border_cardinality(CardinalityKind kind, const BipolarFuzzySet& set);

/// SzmidtKacprzykPi throws DomainError where u + c = 1 (the points U and C).
EntropyResult entropy_point(EntropyKind kind, const BipolarValue& x,
                            VectorNorm norm = VectorNorm::Max);

/// Mean pointwise entropy. Throws DomainError on an empty set, or for the
/// vector kind when no norm is given.
double entropy_set(EntropyKind kind, const BipolarFuzzySet& set,
                   std::optional<VectorNorm> norm = std::nullopt);

}  // namespace bipolar
