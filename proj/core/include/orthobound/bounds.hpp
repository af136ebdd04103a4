#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthobound/cardinality.hpp"
#include "orthobound/envelope.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound {

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// A precondition or consistency condition evaluated along a pipeline.
struct CheckedAssertion {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Result of a bound pipeline: echoed inputs, intermediate quantities in
/// evaluation order, the assertions checked on the way and the final N.
struct BoundReport {
  std::string pipeline;
  std::vector<NamedValue> inputs;
  std::vector<NamedValue> intermediates;
  std::vector<std::string> envelopes;
  std::vector<CheckedAssertion> assertions;
  std::vector<std::string> trace;

  Cardinality N;
  std::string tight_method;
  /// Closed-form value before flooring, when the pipeline has one.
  std::optional<double> closed_form;
  /// log10 of the closed form when it is too large to hold directly.
  std::optional<double> closed_form_log10;
  /// Spherical-code evaluation behind N, when one was made.
  std::optional<CodeBoundReport> code_bound;
  /// Secondary evaluations (e.g. the generic pipeline next to a closed form).
  std::vector<BoundReport> related;

  /// Input or intermediate by name; throws std::out_of_range when absent.
  double get(std::string_view name) const;
  bool has(std::string_view name) const;
  bool all_assertions_hold() const;
};

struct MeanDispersionCount {
  double A = 0.0;
  /// 8 pi A^2: at most this many elements.
  double headline = 0.0;
  /// floor((16 pi A^2 - 1) / 2), the largest index allowed by 2n + 1 <= 16 pi A^2.
  long long n_max = 0;
  /// floor(8 pi A^2) - 1, the largest index allowed by the sharp constant
  /// (n + 1)^2 / (2 pi) <= 4 (n + 1) A^2.
  long long n_max_sharp = 0;
  /// Even a single element is impossible: 4 A^2 < 1 / (2 pi).
  bool heisenberg_infeasible = false;
};

MeanDispersionCount mean_dispersion_max_count(double A);

/// sqrt((2n + 1) / (16 pi)).
double minimax_lower(int n);
/// sqrt((n + 1) / (8 pi)), from the sharp constant.
double minimax_lower_sharp(int n);

/// Quantitative umbrella theorem. eps defaults to 1 / (50 M).
BoundReport umbrella_bound(const Envelope& phi, const Envelope& psi, std::optional<double> eps = std::nullopt);

/// Envelopes C (1 + |x|)^{-p} in time and frequency: the closed form of the
/// applicable case, plus the generic umbrella pipeline run at the
/// proposition's eps choice.
BoundReport power_law_bound(double p, double C);

/// Closed-form eps at which the generic pipeline reaches the third-case
/// closed form for p > 3/2: every eps below it gives alpha < 1/d.
double power_law_case3_epsilon(double p, double C);

/// Envelopes C exp(-pi a x^2) in time and frequency.
BoundReport gaussian_bound(double a, double C);

/// Orthonormal families with |mu_p|, |mu_p^|, Delta_p, Delta_p^ <= A.
BoundReport p_mean_dispersion_bound(double A, double p, double eps);

/// p = 2 with eps = (sqrt(1 + 1/(50 A)) - 1) / 2, reporting the A^4 scaling.
BoundReport p_mean_dispersion_optimized(double A);

/// Envelopes of product form |e_k| <= phi_k phi with ||phi_k||_{2q} <= C,
/// 1/p + 1/q = 1 (and the hatted mirror in frequency). Tail level eps is an
/// energy: int_{|t|>T} |e_k|^2 <= eps. p, phat must lie in [1, inf).
BoundReport holder_envelope_bound(double p, double phat, double C, const Envelope& phi, const Envelope& psi,
                                  double eps);

}  // namespace orthobound
