#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipolar/kernel.hpp"

namespace bipolar {

enum class NormKind { MinMax, Lukasiewicz, Product };

/// A t-norm together with its dual t-conorm under x -> 1 - x.
class NormPair {
 public:
  constexpr NormPair() = default;
  constexpr explicit NormPair(NormKind kind) : kind_(kind) {}

  constexpr NormKind kind() const noexcept { return kind_; }

  double tnorm(double a, double b) const noexcept;
  double tconorm(double a, double b) const noexcept;

 private:
  NormKind kind_ = NormKind::MinMax;
};

inline constexpr NormKind kAllNormKinds[] = {NormKind::MinMax, NormKind::Lukasiewicz,
                                             NormKind::Product};

std::string_view to_string(NormKind kind) noexcept;
/// Accepts "minmax", "lukasiewicz", "product".
std::optional<NormKind> parse_norm_kind(std::string_view name) noexcept;

/// mu combined by the t-conorm, nu by the t-norm.
BipolarValue unite(const BipolarValue& a, const BipolarValue& b, NormPair norms = {});
/// mu combined by the t-norm, nu by the t-conorm.
BipolarValue intersect(const BipolarValue& a, const BipolarValue& b, NormPair norms = {});
/// (nu, mu)
BipolarValue complement(const BipolarValue& x) noexcept;
/// (1 - nu, 1 - mu)
BipolarValue dual(const BipolarValue& x) noexcept;
/// (1 - mu, 1 - nu)
BipolarValue negation(const BipolarValue& x) noexcept;

/// A finite universe of named elements, each with one bipolar value.
/// Iteration follows insertion order.
class BipolarFuzzySet {
 public:
  using Entry = std::pair<std::string, BipolarValue>;
  using const_iterator = std::vector<Entry>::const_iterator;

  BipolarFuzzySet() = default;

  /// Throws DomainError on an empty or duplicate identifier.
  void insert(std::string id, const BipolarValue& value);

  bool contains(std::string_view id) const;
  /// Throws DomainError when `id` is not in the universe.
  const BipolarValue& at(std::string_view id) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }
  const Entry& operator[](std::size_t k) const { return entries_[k]; }

  std::vector<std::string> ids() const;

  friend bool operator==(const BipolarFuzzySet& a, const BipolarFuzzySet& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Throws UniverseMismatch naming the identifiers present in only one of the sets.
void require_same_universe(const BipolarFuzzySet& a, const BipolarFuzzySet& b);

enum class SetOpKind { Union, Intersection, Complement, Dual, Negation };

std::string_view to_string(SetOpKind kind) noexcept;
std::optional<SetOpKind> parse_set_op(std::string_view name) noexcept;
bool is_binary(SetOpKind kind) noexcept;

/// Pointwise lift of the value operators. Binary kinds need `b` with the same
/// universe as `a`; the result follows the element order of `a`.
BipolarFuzzySet set_op(SetOpKind kind, const BipolarFuzzySet& a,
                       const BipolarFuzzySet* b = nullptr, NormPair norms = {});

}  // namespace bipolar
