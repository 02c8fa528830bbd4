#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "credits/core.hpp"

namespace credits {

enum class SchemeKind { Equal, Arithmetic, Geometric, Harmonic };

inline constexpr double kDefaultGeometricRatio = 0.5;

std::string_view to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_kind(std::string_view name);

/// Named weight-generating scheme. `ratio` is set exactly when the kind is
/// geometric; use the factories to keep that true.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::Equal;
  std::optional<double> ratio;

  static SchemeSpec equal() { return {SchemeKind::Equal, std::nullopt}; }
  static SchemeSpec arithmetic() { return {SchemeKind::Arithmetic, std::nullopt}; }
  static SchemeSpec harmonic() { return {SchemeKind::Harmonic, std::nullopt}; }
  /// Throws RatioOutOfRange unless 0 < ratio <= 1.
  static SchemeSpec geometric(double ratio = kDefaultGeometricRatio);

  /// e.g. "arithmetic", "geometric(0.5)".
  std::string tag() const;

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

WeightVector equal_weights(std::size_t k);
WeightVector arithmetic_weights(std::size_t k);
WeightVector geometric_weights(std::size_t k, double ratio);
WeightVector harmonic_weights(std::size_t k);

WeightVector make_weights(const SchemeSpec& scheme, std::size_t k);

enum class DescendingVerdict { Strict, Flat, Invalid };

std::string_view to_string(DescendingVerdict verdict);

/// Strict when w_1 > ... > w_k, Flat when every entry is equal (a single
/// entry counts as flat), otherwise Invalid.
DescendingVerdict validate_descending(const WeightVector& w);

}  // namespace credits
