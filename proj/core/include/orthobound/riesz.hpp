#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orthobound/bounds.hpp"
#include "orthobound/envelope.hpp"
#include "orthobound/grid.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/projections.hpp"

namespace orthobound {

/// Norms of the orthogonalizer U (U x_k = e_k) of a Riesz sequence, and the
/// angle constant they control:
///   sum |a_k|^2 / ||U||^2 <= ||sum a_k x_k||^2 <= ||U^-1||^2 sum |a_k|^2.
struct OrthogonalizerStats {
  double norm_U = 1.0;
  double norm_Uinv = 1.0;
  /// |<x_k, x_l>| <= C_U ||x_k|| ||x_l|| for k != l.
  double C_U = 0.0;
  std::optional<double> near_isometry_beta;
  /// Norms estimated from a finite Gram section rather than declared.
  bool approximate = false;

  double condition() const { return norm_U * norm_Uinv; }
  /// Range of ||x_k||.
  double min_element_norm() const { return 1.0 / norm_U; }
  double max_element_norm() const { return norm_Uinv; }
};

/// sqrt(2) (1 - 1/(||U|| ||U^-1||)^2). Zero exactly at condition number 1.
double angle_constant(double norm_U, double norm_Uinv);

/// sqrt(2) min{1 - 1/(||U|| ||U^-1||)^2, (||U^-1|| / ||U||)^2 - 1}, kept for
/// comparison: the second term can vanish while distinct elements are far
/// from orthogonal, so it is not a valid angle bound.
double angle_constant_min_form(double norm_U, double norm_Uinv);

/// Throws DomainError unless both norms are positive and their product is
/// at least 1 (to 1e-12).
OrthogonalizerStats orthogonalizer_stats(double norm_U, double norm_Uinv);

/// Worst case allowed by (1 + beta)^-1 <= ||U||^2, ||U^-1||^2 <= 1 + beta:
/// ||U|| = ||U^-1|| = sqrt(1 + beta), C_U = sqrt(2) beta (2 + beta) / (1 + beta)^2.
OrthogonalizerStats near_isometry_stats(double beta);

double near_isometry_angle_bound(double beta);

/// Norms from the extreme eigenvalues of the family's Gram matrix:
/// ||U|| = 1/sqrt(mu_min), ||U^-1|| = sqrt(mu_max). Marked approximate.
OrthogonalizerStats estimate_stats(std::span<const SampledFunction> family);

/// Same from the singular values of a mixing matrix x_k = sum_j G(j, k) h_j
/// applied to an orthonormal list. Exact.
OrthogonalizerStats stats_from_mixing(const Eigen::MatrixXcd& mixing);

struct RieszTraceCheck {
  double lhs = 0.0;         ///< sum_{k<m} (2k+1)/(2pi) = m^2 / (2pi)
  double form_sum = 0.0;    ///< sum_k <H x_k, x_k>
  double rhs = 0.0;         ///< ||U||^2 form_sum
  double weak_lhs = 0.0;    ///< m (2m - 1) / (4pi)
  bool holds = false;       ///< lhs <= rhs (1e-6 relative)
  bool weak_holds = false;  ///< weak_lhs <= rhs
};

/// Trace inequality with the ||U||^2 loss for a finite Riesz sequence.
RieszTraceCheck riesz_trace_bound(std::span<const SampledFunction> family, double norm_U);

struct RieszCount {
  double A = 0.0;
  double norm_U = 1.0;
  double headline = 0.0;      ///< 8 pi A^2 ||U||^2
  long long n_max = 0;        ///< floor((16 pi A^2 ||U||^2 - 1) / 2)
  long long n_max_sharp = 0;  ///< floor(8 pi A^2 ||U||^2) - 1
};

RieszCount riesz_mean_dispersion_bound(double A, double norm_U);

/// (1/||U||) sqrt((2n + 1)/(16 pi)).
double riesz_minimax_lower(int n, double norm_U);

struct EpsCeiling {
  double value = 0.0;
  /// "||U||^-2" or "sqrt((||U||^-2 - C(U) ||U^-1||^2) / 2)"
  std::string binding;
};

/// min(||U||^-2, sqrt((||U||^-2 - C(U) ||U^-1||^2) / 2)). Throws
/// DomainError when C(U) ||U^-1||^2 >= ||U||^-2 (no eps is admissible).
EpsCeiling riesz_eps_ceiling(const OrthogonalizerStats& s);

/// (eps^2 + C(U) ||U^-1||^2) / (||U||^-2 - eps^2), for 0 < eps below the
/// ceiling. Throws DomainError naming the binding constraint otherwise.
double riesz_alpha(double eps, const OrthogonalizerStats& s);

/// ((1 + beta) eps^2 + sqrt(2) beta (2 + beta)) / (1 - (1 + beta) eps^2):
/// riesz_alpha at near_isometry_stats(beta).
double near_isometry_alpha_bound(double eps, double beta);

/// Largest beta for which near_isometry_stats admits any eps:
/// sqrt(1 + 1/sqrt(2)) - 1.
double max_admissible_beta();

/// Projects the normalized elements x_k / ||x_k|| on the first d basis
/// functions and checks the code's coherence against riesz_alpha(eps, s).
CodeFromFamily riesz_family_to_code(std::span<const SampledFunction> family, std::span<const SampledFunction> basis,
                                    int d, double eps, const OrthogonalizerStats& s);

/// Umbrella pipeline for Riesz sequences with near_isometry_stats(beta).
/// The umbrella tail level eps turns into a projection error
/// eps_R = 7 eps M (1 + beta) of the normalized elements and the code uses
/// max(50 eps^2 M^2, riesz_alpha(eps_R)). eps defaults to the largest value
/// admissible for both. Throws PreconditionError (naming the largest
/// admissible beta) when beta is too large for any eps.
BoundReport umbrella_riesz_bound(const Envelope& phi, const Envelope& psi, double beta,
                                 std::optional<double> eps = std::nullopt);

/// Log-spaced scan of eps over (0, eps_max] for the smallest N; ties go to
/// the larger eps. Evaluations whose dimension overflows are skipped.
BoundReport umbrella_riesz_best(const Envelope& phi, const Envelope& psi, double beta, int samples = 60);

/// x_k = sum_j mixing(j, k) basis_j.
std::vector<SampledFunction> mixed_family(std::span<const SampledFunction> basis, const Eigen::MatrixXcd& mixing);

/// Random n x n real matrix Q1 diag(s) Q2 with Haar-like orthogonal factors
/// and singular values spread over [smin, smax] (both attained).
Eigen::MatrixXd random_mixing(int n, double smin, double smax, std::uint64_t seed);

struct FrameWitness {
  double min_ratio = 0.0;  ///< min ||sum a x||^2 / sum |a|^2 over the trials
  double max_ratio = 0.0;
  double max_angle_excess = 0.0;  ///< max |<x_k,x_l>| - C(U) ||x_k|| ||x_l||
  bool frame_holds = false;
  bool angles_hold = false;
};

/// Frame inequality on `trials` random coefficient vectors and the pairwise
/// angle bound (+1e-8) for a family with the given stats.
FrameWitness frame_witness(std::span<const SampledFunction> family, const OrthogonalizerStats& s, int trials,
                           std::uint64_t seed);

}  // namespace orthobound
