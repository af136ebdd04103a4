#pragma once

#include <optional>
#include <string>

#include "orthobound/grid.hpp"

namespace orthobound {

/// Pointwise majorant of |e_n| (or |e_n^|): C (1 + |x|)^{-p}, C exp(-pi a x^2),
/// or a sampled profile.
class Envelope {
 public:
  enum class Kind { power_law, gaussian, tabulated };

  /// Requires p > 1/2 (square integrable) and C > 0.
  static Envelope power_law(double p, double C);
  /// Requires a > 0 and C > 0.
  static Envelope gaussian(double a, double C);
  /// |f| on the grid of f, zero outside; f must not vanish identically.
  static Envelope tabulated(SampledFunction f);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double a() const { return a_; }
  double C() const { return C_; }
  const std::optional<SampledFunction>& samples() const { return samples_; }

  /// ||phi||_2, computed once at construction.
  double l2_norm() const { return l2_norm_; }

  double value(double x) const;

  /// int_{|x|>T} |phi(x)|^s dx. Throws DomainError when phi is not in L^s.
  double tail(double s, double T) const;

  /// Smallest T >= 0 with tail(s, T) <= level (closed forms for the
  /// analytic kinds, bisection on the sampled tail otherwise). Throws
  /// NumericalError when a sampled envelope's grid ends before the level
  /// is reached.
  double tail_crossing(double s, double level) const;

  /// "power:p=2,C=1.22474", "gauss:a=1,C=1.18921", "tabulated:n=4096,L=16".
  std::string describe() const;

 private:
  Envelope() = default;

  Kind kind_ = Kind::power_law;
  double p_ = 0.0;
  double a_ = 0.0;
  double C_ = 0.0;
  std::optional<SampledFunction> samples_;
  double l2_norm_ = 0.0;
};

struct CfValue {
  double T = 0.0;
  /// eps >= 1: the whole mass may lie outside, so C_f = 0 trivially.
  bool trivial = false;
};

/// C_f(eps) = inf{T >= 0 : int_{|t|>T} |f|^2 <= eps^2 ||f||^2}.
CfValue c_f_epsilon(const Envelope& env, double eps);

/// Parses "power:p,C", "gauss:a,C" (or "gaussian:a,C"); tabulated envelopes
/// come from files and are not handled here. Throws DomainError.
Envelope parse_envelope(const std::string& spec);

}  // namespace orthobound
