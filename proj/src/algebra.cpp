#include "bipolar/algebra.hpp"

#include <algorithm>

namespace bipolar {

namespace {

// Guards against 1 + 1e-17 style drift from a + b - a*b.
double unit(double a) { return std::clamp(a, 0.0, 1.0); }

}  // namespace

double NormPair::tnorm(double a, double b) const noexcept {
  switch (kind_) {
    case NormKind::MinMax:
      return std::min(a, b);
    case NormKind::Lukasiewicz:
      return std::max(a + b - 1.0, 0.0);
    case NormKind::Product:
      return a * b;
  }
  return std::min(a, b);
}

double NormPair::tconorm(double a, double b) const noexcept {
  switch (kind_) {
    case NormKind::MinMax:
      return std::max(a, b);
    case NormKind::Lukasiewicz:
      return std::min(a + b, 1.0);
    case NormKind::Product:
      return unit(a + b - a * b);
  }
  return std::max(a, b);
}

std::string_view to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::MinMax:
      return "minmax";
    case NormKind::Lukasiewicz:
      return "lukasiewicz";
    case NormKind::Product:
      return "product";
  }
  return "minmax";
}

std::optional<NormKind> parse_norm_kind(std::string_view name) noexcept {
  for (NormKind kind : kAllNormKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

BipolarValue unite(const BipolarValue& a, const BipolarValue& b, NormPair norms) {
  return BipolarValue(norms.tconorm(a.mu(), b.mu()), norms.tnorm(a.nu(), b.nu()));
}

BipolarValue intersect(const BipolarValue& a, const BipolarValue& b, NormPair norms) {
  return BipolarValue(norms.tnorm(a.mu(), b.mu()), norms.tconorm(a.nu(), b.nu()));
}

BipolarValue complement(const BipolarValue& x) noexcept { return BipolarValue(x.nu(), x.mu()); }

BipolarValue dual(const BipolarValue& x) noexcept {
  return BipolarValue(1.0 - x.nu(), 1.0 - x.mu());
}

BipolarValue negation(const BipolarValue& x) noexcept {
  return BipolarValue(1.0 - x.mu(), 1.0 - x.nu());
}

void BipolarFuzzySet::insert(std::string id, const BipolarValue& value) {
  if (id.empty()) throw DomainError("element identifier must not be empty");
  if (index_.contains(id)) throw DomainError("duplicate element identifier '" + id + "'");
  index_.emplace(id, entries_.size());
  entries_.emplace_back(std::move(id), value);
}

bool BipolarFuzzySet::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

const BipolarValue& BipolarFuzzySet::at(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown element '" + std::string(id) + "'");
  return entries_[it->second].second;
}

std::vector<std::string> BipolarFuzzySet::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [id, value] : entries_) out.push_back(id);
  return out;
}

void require_same_universe(const BipolarFuzzySet& a, const BipolarFuzzySet& b) {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  for (const auto& [id, value] : a) {
    if (!b.contains(id)) only_a.push_back(id);
  }
  for (const auto& [id, value] : b) {
    if (!a.contains(id)) only_b.push_back(id);
  }
  if (only_a.empty() && only_b.empty()) return;

  auto join = [](const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
      if (!out.empty()) out += ", ";
      out += id;
    }
    return out.empty() ? std::string("-") : out;
  };
  throw UniverseMismatch("universes differ: only in first {" + join(only_a) +
                         "}, only in second {" + join(only_b) + "}");
}

std::string_view to_string(SetOpKind kind) noexcept {
  switch (kind) {
    case SetOpKind::Union:
      return "union";
    case SetOpKind::Intersection:
      return "intersection";
    case SetOpKind::Complement:
      return "complement";
    case SetOpKind::Dual:
      return "dual";
    case SetOpKind::Negation:
      return "negation";
  }
  return "union";
}

std::optional<SetOpKind> parse_set_op(std::string_view name) noexcept {
  for (SetOpKind kind : {SetOpKind::Union, SetOpKind::Intersection, SetOpKind::Complement,
                         SetOpKind::Dual, SetOpKind::Negation}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_binary(SetOpKind kind) noexcept {
  return kind == SetOpKind::Union || kind == SetOpKind::Intersection;
}

BipolarFuzzySet set_op(SetOpKind kind, const BipolarFuzzySet& a, const BipolarFuzzySet* b,
                       NormPair norms) {
  if (is_binary(kind)) {
    if (b == nullptr) {
      throw DomainError(std::string(to_string(kind)) + " needs two sets");
    }
    require_same_universe(a, *b);
  }

  BipolarFuzzySet out;
  for (const auto& [id, x] : a) {
    switch (kind) {
      case SetOpKind::Union:
        out.insert(id, unite(x, b->at(id), norms));
        break;
      case SetOpKind::Intersection:
        out.insert(id, intersect(x, b->at(id), norms));
        break;
      case SetOpKind::Complement:
        out.insert(id, complement(x));
        break;
      case SetOpKind::Dual:
        out.insert(id, dual(x));
        break;
      case SetOpKind::Negation:
        out.insert(id, negation(x));
        break;
    }
  }
  return out;
}

}  // namespace bipolar
