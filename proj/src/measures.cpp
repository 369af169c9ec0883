#include "bipolar/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bipolar {

std::string_view to_string(CardinalityKind kind) noexcept {
  switch (kind) {
    case CardinalityKind::FromPE:
      return "pe";
    case CardinalityKind::FromPH:
      return "ph";
    case CardinalityKind::FromPP:
      return "pp";
    case CardinalityKind::ClassicMin:
      return "min";
    case CardinalityKind::ClassicMed:
      return "med";
    case CardinalityKind::ClassicMax:
      return "max";
  }
  return "pe";
}

std::optional<CardinalityKind> parse_cardinality_kind(std::string_view name) noexcept {
  for (CardinalityKind kind : kAllCardinalityKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(EntropyKind kind) noexcept {
  switch (kind) {
    case EntropyKind::FromPE:
      return "pe";
    case EntropyKind::FromPH:
      return "ph";
    case EntropyKind::FromPP:
      return "pp";
    case EntropyKind::SzmidtKacprzyk:
      return "sk";
    case EntropyKind::SzmidtKacprzykPi:
      return "skpi";
    case EntropyKind::BustinceBurillo:
      return "bb";
    case EntropyKind::GrzegorzewskiMrowkaVector:
      return "gm";
  }
  return "pe";
}

std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept {
  for (EntropyKind kind : kAllEntropyKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(VectorNorm norm) noexcept {
  return norm == VectorNorm::Max ? "max" : "sum";
}

std::optional<VectorNorm> parse_vector_norm(std::string_view name) noexcept {
  if (name == "max") return VectorNorm::Max;
  if (name == "sum") return VectorNorm::Sum;
  return std::nullopt;
}

bool is_classic(CardinalityKind kind) noexcept {
  return kind == CardinalityKind::ClassicMin || kind == CardinalityKind::ClassicMed ||
         kind == CardinalityKind::ClassicMax;
}

double cardinality_point(CardinalityKind kind, const BipolarValue& x) {
  if (is_classic(kind)) {
    const double pi = 1.0 - x.mu() - x.nu();
    if (pi < -kEpsilon) {
      throw DomainError("cardinality '" + std::string(to_string(kind)) +
                        "' is undefined for paraconsistent values");
    }
    switch (kind) {
      case CardinalityKind::ClassicMin:
        return x.mu();
      case CardinalityKind::ClassicMed:
        return x.mu() + pi / 2.0;
      default:
        return x.mu() + pi;
    }
  }

  const PentaValue p = to_penta(x);
  const double neutral = p.u + p.c;
  switch (kind) {
    case CardinalityKind::FromPE: {
      const double truth_leg = (1.0 - p.t + p.f) / 2.0;
      const double neutral_leg = (p.u - p.c) / (1.0 + neutral);
      return 1.0 - std::hypot(truth_leg, neutral_leg);
    }
    case CardinalityKind::FromPH:
      return (1.0 + p.t - p.f) / (2.0 + neutral);
    case CardinalityKind::FromPP:
      return (1.0 + p.t - p.f) / (2.0 * (1.0 + neutral));
    default:
      return 0.0;
  }
}

double cardinality_set(CardinalityKind kind, const BipolarFuzzySet& set) {
  double total = 0.0;
  for (const auto& [id, x] : set) total += cardinality_point(kind, x);
  return total;
}

double border_cardinality(CardinalityKind kind, const BipolarFuzzySet& set) {
  double total = static_cast<double>(set.size());
  for (const auto& [id, x] : set) {
    total -= cardinality_point(kind, x) + cardinality_point(kind, complement(x));
  }
  return total;
}

EntropyResult entropy_point(EntropyKind kind, const BipolarValue& x, VectorNorm norm) {
  const PentaValue p = to_penta(x);
  const double polar = p.t + p.f;
  const double neutral = p.u + p.c;
  switch (kind) {
    case EntropyKind::FromPE: {
      const double neutral_leg = 2.0 * (p.u - p.c) / (1.0 + neutral);
      return {std::hypot(1.0 - polar, neutral_leg), std::nullopt};
    }
    case EntropyKind::FromPH:
      return {2.0 * (1.0 - polar + neutral) / (2.0 + neutral), std::nullopt};
    case EntropyKind::FromPP:
      return {(1.0 - polar + 2.0 * neutral) / (1.0 + neutral), std::nullopt};
    case EntropyKind::SzmidtKacprzyk:
      return {(1.0 - polar + neutral) / (1.0 + polar + neutral), std::nullopt};
    case EntropyKind::SzmidtKacprzykPi: {
      const double den = 1.0 - neutral;
      if (den <= kEpsilon) {
        throw DomainError("entropy 'skpi' is undefined where u + c = 1 (points U and C)");
      }
      return {(1.0 - polar) / den, std::nullopt};
    }
    case EntropyKind::BustinceBurillo:
      return {neutral, std::nullopt};
    case EntropyKind::GrzegorzewskiMrowkaVector: {
      const std::array<double, 2> v{1.0 - polar, neutral};
      const double scalar = norm == VectorNorm::Max ? std::max(v[0], v[1]) : v[0] + v[1];
      return {scalar, v};
    }
  }
  return {};
}

double entropy_set(EntropyKind kind, const BipolarFuzzySet& set, std::optional<VectorNorm> norm) {
  if (set.empty()) throw DomainError("entropy of an empty universe is undefined");
  if (kind == EntropyKind::GrzegorzewskiMrowkaVector && !norm) {
    throw DomainError("vector entropy 'gm' needs a norm (max or sum)");
  }
  double total = 0.0;
  for (const auto& [id, x] : set) {
    total += entropy_point(kind, x, norm.value_or(VectorNorm::Max)).scalar;
  }
  return total / static_cast<double>(set.size());
}

}  // namespace bipolar
