#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace orthobound {

/// A count N >= 1 that may be astronomically large. Small values are kept
/// exactly; large ones only through log10(N).
class Cardinality {
 public:
  /// Largest value stored exactly.
  static constexpr std::uint64_t kExactLimit = 1'000'000'000'000'000'000ULL;

  Cardinality() = default;
  static Cardinality exact(std::uint64_t n);
  /// floor(x) for a real bound x >= 1 (safe floor), exact when it fits.
  static Cardinality floor_of(double x);
  /// floor(10^l), exact when it fits.
  static Cardinality floor_of_log10(double l);

  double log10() const { return log10_; }
  const std::optional<std::uint64_t>& value() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }
  /// Exact value, or a double approximation (inf when beyond range).
  double approx() const;

  /// "27" or "10^1234.56".
  std::string to_string() const;

  friend std::partial_ordering operator<=>(const Cardinality& a, const Cardinality& b);
  friend bool operator==(const Cardinality& a, const Cardinality& b) { return (a <=> b) == 0; }

 private:
  double log10_ = 0.0;
  std::optional<std::uint64_t> exact_ = 1;
};

}  // namespace orthobound
