#pragma once

#include <vector>

#include <Eigen/Dense>

#include "orthobound/grid.hpp"
#include "orthobound/hermite.hpp"

namespace orthobound {

/// Eigenvalues below this are treated as numerically unresolved.
inline constexpr double kPlungeCutoff = 1e-12;

/// Prolate spheroidal wave functions for time-limiting to [-T, T] and
/// band-limiting to [-Omega, Omega], ordered by decreasing concentration.
///
/// Internally S_n(c, x) on [-1, 1] with c = 2 pi T Omega, expanded in
/// normalized Legendre polynomials. Then
///   psi_n(t)   = sqrt(lambda_n / T) S_n(t / T)
///   psi_n^(xi) = sqrt(lambda_n / T) / (mu_n Omega) S_n(xi / Omega) on [-Omega, Omega]
/// where mu_n is the eigenvalue of the finite Fourier transform on [-1, 1].
struct PswfBasis {
  double T = 0.0;
  double Omega = 0.0;
  Grid grid;
  std::vector<SampledFunction> functions;
  /// Concentration on [-T, T]; nonincreasing, saturating just below 1 in
  /// double precision.
  std::vector<double> lambdas;

  int d_max() const { return static_cast<int>(functions.size()); }
  double bandwidth() const;

  /// psi_n(t) anywhere on the real line.
  double value(int n, double t) const;
  /// psi_n^(xi); zero outside [-Omega, Omega].
  complex fourier_value(int n, double xi) const;
  /// S_n(x) on [-1, 1] (unit norm there).
  double legendre_value(int n, double x) const;
  /// psi_n(T x) / sqrt(lambda_n / T): S_n on [-1, 1], continued to the real
  /// line through its finite Fourier transform.
  double extended_value(int n, double x) const;

  /// L^2(R) Gram matrix of psi_0..psi_{d-1}, computed on the frequency side
  /// where every psi_n has compact support.
  Eigen::MatrixXd l2_gram(int d) const;

  /// Per-function data from the Legendre solve.
  struct Mode {
    int parity = 0;               ///< n mod 2
    std::vector<double> beta;     ///< coefficients of P_{parity + 2i}, normalized
    double chi = 0.0;             ///< eigenvalue of the commuting operator
    double mu = 0.0;              ///< mu_n for even n, mu_n / i for odd n
  };
  std::vector<Mode> modes;
};

/// Samples psi_0..psi_{d_max-1} on `grid`. Requires d_max >= floor(4 T Omega) + 2;
/// throws NumericalError naming the largest reliable index when the request
/// reaches eigenvalues below kPlungeCutoff.
PswfBasis build_pswf_basis(double T, double Omega, int d_max, const Grid& grid = Grid());

/// lambda_0..lambda_{count-1} without sampling and without the plunge check
/// (tiny eigenvalues are returned as computed, clamped to [0, 1]).
std::vector<double> prolate_eigenvalues(double T, double Omega, int count);

/// floor(4 T Omega) + 1.
int landau_pollak_dimension(double T, double Omega);

/// Coefficients <f, psi_j>, j < d. With f taken as zero off the grid these
/// are exact L^2(R) pairings up to quadrature error.
std::vector<complex> pswf_coefficients(const SampledFunction& f, const PswfBasis& basis, int d);

/// sum_{j<d} <f, psi_j> psi_j sampled on the basis grid.
SampledFunction project(const SampledFunction& f, const PswfBasis& basis, int d);

/// ||f - P_d f|| in L^2(R), from ||f||^2 - sum |<f, psi_j>|^2 (clamped at 0).
/// The sampled psi_j have slowly decaying tails cut off by the grid, so the
/// grid difference f - project(f) would not be accurate.
double projection_residual(const SampledFunction& f, const PswfBasis& basis, int d);

/// Smallest eps with f in P_{T,Omega,eps}: max of the square roots of the
/// time tail beyond T and the frequency tail beyond Omega.
double in_P_class(const SampledFunction& f, double T, double Omega, FormMode mode = FormMode::unit_norm);

struct ApproximabilityReport {
  double epsilon = 0.0;           ///< the eps supplied (f in P_{T,Omega,eps})
  double attained_epsilon = 0.0;  ///< in_P_class(f, T, Omega)
  int d = 0;
  double residual = 0.0;          ///< ||f - P_d f||
  double threshold = 0.0;         ///< 7 eps
  bool member_of_S = false;       ///< residual < 7 eps and ||f|| = 1
};

/// Checks ||f - P_d f|| <= 7 eps with d = floor(4 T Omega) + 1. Throws
/// PreconditionError (carrying the attained eps) when f is not in
/// P_{T,Omega,eps} or not unit norm.
ApproximabilityReport landau_pollak_check(const SampledFunction& f, double T, double Omega, double eps,
                                          const PswfBasis& basis);

}  // namespace orthobound
