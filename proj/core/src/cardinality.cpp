#include "orthobound/cardinality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

Cardinality Cardinality::exact(std::uint64_t n) {
  if (n == 0) throw DomainError("Cardinality: counts start at 1");
  Cardinality c;
  c.exact_ = n;
  c.log10_ = std::log10(static_cast<double>(n));
  return c;
}

Cardinality Cardinality::floor_of(double x) {
  if (std::isnan(x) || x < 1.0 - 1e-12) throw DomainError("Cardinality: bound below 1");
  if (x < static_cast<double>(kExactLimit)) {
    return exact(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(safe_floor(x))));
  }
  Cardinality c;
  c.exact_.reset();
  c.log10_ = std::log10(x);
  return c;
}

Cardinality Cardinality::floor_of_log10(double l) {
  if (std::isnan(l)) throw DomainError("Cardinality: NaN");
  if (l < 18.0) return floor_of(std::pow(10.0, l));
  Cardinality c;
  c.exact_.reset();
  c.log10_ = l;
  return c;
}

double Cardinality::approx() const {
  if (exact_) return static_cast<double>(*exact_);
  return log10_ > 308.0 ? INFINITY : std::pow(10.0, log10_);
}

std::string Cardinality::to_string() const {
  if (exact_) return std::to_string(*exact_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "10^%.6g", log10_);
  return buf;
}

std::partial_ordering operator<=>(const Cardinality& a, const Cardinality& b) {
  if (a.exact_ && b.exact_) return *a.exact_ <=> *b.exact_;
  if (a.exact_) return std::partial_ordering::less;
  if (b.exact_) return std::partial_ordering::greater;
  return a.log10_ <=> b.log10_;
}

}  // namespace orthobound
