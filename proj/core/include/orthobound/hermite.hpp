#pragma once

#include <span>
#include <vector>

#include "orthobound/grid.hpp"

namespace orthobound {

/// Eigenvalue (2k+1)/(2 pi) of the Hermite operator H = -(1/4pi^2) d^2/dt^2 + t^2.
double hermite_eigenvalue(int k);

/// Values h_0(t), ..., h_{count-1}(t) of the L^2-normalized Hermite functions
/// with h_0(t) = 2^{1/4} exp(-pi t^2) and h_k^ = i^{-k} h_k, computed with
/// the stable three-term recurrence.
std::vector<double> hermite_functions(int count, double t);

double hermite_function(int k, double t);

/// h_0..h_{K-1} sampled on a grid.
struct HermiteBasis {
  Grid grid;
  std::vector<SampledFunction> functions;
  /// max |<h_i, h_j> - delta_ij| on the grid
  double gram_residual = 0.0;

  int size() const { return static_cast<int>(functions.size()); }
};

/// Throws NumericalError naming the first index whose Gram row exceeds
/// `tolerance`.
HermiteBasis build_hermite_basis(int count, const Grid& grid, double tolerance = 1e-8);

enum class FormMode {
  unit_norm,  ///< reject inputs with ||f|| != 1
  raw,        ///< evaluate the quadratic form as is
};

/// <Hf, f> = int t^2 |f|^2 dt + int xi^2 |f^|^2 dxi (moment form, no
/// differentiation).
double hermite_form(const SampledFunction& f, FormMode mode = FormMode::unit_norm);

/// Hf = t^2 f - f''/(4 pi^2), with the derivative term taken spectrally as
/// the inverse transform of xi^2 f^.
SampledFunction apply_hermite_operator(const SampledFunction& f);

struct TraceCheck {
  double lhs = 0.0;  ///< sum_{k<m} (2k+1)/(2pi)
  double rhs = 0.0;  ///< sum_k <H phi_k, phi_k>
  /// eigenvalues of the compression [<H phi_j, phi_k>], ascending
  std::vector<double> matrix_eigenvalues;
  bool holds = false;
};

/// Rayleigh-Ritz trace inequality for an orthonormal family (checked to 1e-6).
TraceCheck rayleigh_ritz_trace(std::span<const SampledFunction> family);

struct ConcentrationRecord {
  double mean_time = 0.0;
  double mean_frequency = 0.0;
  double variance_time = 0.0;
  double variance_frequency = 0.0;
  double form = 0.0;  ///< <H e_k, e_k> from the moment integrals
};

struct ConcentrationSummary {
  std::vector<ConcentrationRecord> records;
  std::vector<double> running_sums;  ///< sum_{k<=n} (var + var^ + mu^2 + mu^^2)
  std::vector<double> bounds;        ///< sharp_bound(n)
  std::vector<bool> equality;        ///< running sum equals bound to 1e-6 relative
  /// |<e_k, h_k>| for the leading block on which equality holds for every n
  std::vector<double> hermite_overlaps;
  /// equality holds for all n <= n0 and every |<e_k,h_k>| = 1 to 1e-4
  bool hermite_identified = false;
  /// largest n0 such that equality holds for all n <= n0 (-1 if none)
  int equality_prefix = -1;
};

inline constexpr double kEqualityTolerance = 1e-6;

ConcentrationSummary sharp_mean_dispersion_check(std::span<const SampledFunction> family);

/// Delta(f) Delta(f^) for ||f|| normalized internally.
double heisenberg_product(const SampledFunction& f);

/// sum_{k<=n} (2k+1)/(2 pi) = (n+1)^2 / (2 pi), attained by h_0..h_n.
double sharp_bound(int n);

/// (n+1)(2n+1)/(4 pi): a weaker lower bound for the same sums, implied by
/// sharp_bound and never attained.
double weak_bound(int n);

}  // namespace orthobound
