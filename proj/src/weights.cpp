#include "credits/weights.hpp"

#include <charconv>
#include <cmath>

namespace credits {

namespace {

void require_authors(std::size_t k)
{
  if (k == 0) {
    throw Error(ErrorCode::ZeroAuthors, "weight scheme needs at least one author");
  }
}

// Divides raw shares by their sum, accumulated in position order.
WeightVector normalized(std::vector<double> raw, std::string tag)
{
  double total = 0.0;
  for (double x : raw) total += x;
  for (double& x : raw) x /= total;
  return {std::move(raw), std::move(tag)};
}

}  // namespace

std::string_view to_string(SchemeKind kind)
{
  switch (kind) {
    case SchemeKind::Equal: return "equal";
    case SchemeKind::Arithmetic: return "arithmetic";
    case SchemeKind::Geometric: return "geometric";
    case SchemeKind::Harmonic: return "harmonic";
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme_kind(std::string_view name)
{
  if (name == "equal") return SchemeKind::Equal;
  if (name == "arithmetic") return SchemeKind::Arithmetic;
  if (name == "geometric") return SchemeKind::Geometric;
  if (name == "harmonic") return SchemeKind::Harmonic;
  return std::nullopt;
}

SchemeSpec SchemeSpec::geometric(double ratio)
{
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::RatioOutOfRange,
                "geometric ratio must lie in (0, 1], got " + std::to_string(ratio));
  }
  return {SchemeKind::Geometric, ratio};
}

std::string SchemeSpec::tag() const
{
  std::string s(to_string(kind));
  if (kind == SchemeKind::Geometric && ratio) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, *ratio);
    s += '(';
    s.append(buf, res.ptr);
    s += ')';
  }
  return s;
}

WeightVector equal_weights(std::size_t k)
{
  require_authors(k);
  const double share = 1.0 / static_cast<double>(k);
  return {std::vector<double>(k, share), "equal"};
}

WeightVector arithmetic_weights(std::size_t k)
{
  require_authors(k);
  const double denom = static_cast<double>(k) * static_cast<double>(k + 1) / 2.0;
  std::vector<double> w(k);
  for (std::size_t i = 1; i <= k; ++i) {
    w[i - 1] = static_cast<double>(k - i + 1) / denom;
  }
  return {std::move(w), "arithmetic"};
}

WeightVector geometric_weights(std::size_t k, double ratio)
{
  require_authors(k);
  const SchemeSpec spec = SchemeSpec::geometric(ratio);
  std::vector<double> raw(k);
  double term = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    raw[i] = term;
    term *= ratio;
  }
  return normalized(std::move(raw), spec.tag());
}

WeightVector harmonic_weights(std::size_t k)
{
  require_authors(k);
  std::vector<double> raw(k);
  for (std::size_t i = 1; i <= k; ++i) raw[i - 1] = 1.0 / static_cast<double>(i);
  return normalized(std::move(raw), "harmonic");
}

WeightVector make_weights(const SchemeSpec& scheme, std::size_t k)
{
  switch (scheme.kind) {
    case SchemeKind::Equal: return equal_weights(k);
    case SchemeKind::Arithmetic: return arithmetic_weights(k);
    case SchemeKind::Geometric:
      return geometric_weights(k, scheme.ratio.value_or(kDefaultGeometricRatio));
    case SchemeKind::Harmonic: return harmonic_weights(k);
  }
  throw Error(ErrorCode::SchemaError, "unknown scheme kind");
}

std::string_view to_string(DescendingVerdict verdict)
{
  switch (verdict) {
    case DescendingVerdict::Strict: return "strict";
    case DescendingVerdict::Flat: return "flat";
    case DescendingVerdict::Invalid: return "invalid-for-resequencing";
  }
  return "unknown";
}

DescendingVerdict validate_descending(const WeightVector& w)
{
  const auto& v = w.weights;
  bool flat = true;
  bool strict = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[0]) flat = false;
    if (!(v[i - 1] > v[i])) strict = false;
  }
  if (flat) return DescendingVerdict::Flat;
  if (strict) return DescendingVerdict::Strict;
  return DescendingVerdict::Invalid;
}

}  // namespace credits
