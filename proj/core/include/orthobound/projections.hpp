#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "orthobound/grid.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound {

/// Spherical code obtained by projecting an (almost) orthonormal family on
/// the first d elements of a reference basis and normalizing.
struct CodeFromFamily {
  int d = 0;
  double epsilon = 0.0;
  /// sqrt of the largest |<f_j, f_k>| allowed between distinct members
  double eta = 0.0;
  bool eta_estimated = false;
  SphericalCode code;             ///< w_k = v_k / ||v_k||
  double coherence = 0.0;         ///< max |<w_j, w_k>|
  double alpha_bound = 0.0;       ///< (eps^2 + eta^2) / (1 - eps^2)
  std::vector<double> residuals;  ///< ||f_k - P_d f_k||
  std::vector<double> coefficient_norms;  ///< ||v_k||
};

/// Core construction from coefficient vectors: column k of `coefficients`
/// holds v_k, `residuals[k]` the distance of f_k to the span and `gram` the
/// family's Gram matrix. Checks each precondition and names the offending
/// index on failure (PreconditionError). When `eta` is absent it is
/// estimated from the largest off-diagonal Gram entry.
CodeFromFamily code_from_coefficients(const Eigen::MatrixXcd& coefficients, std::span<const double> residuals,
                                      const Eigen::MatrixXcd& gram, double eps,
                                      std::optional<double> eta = std::nullopt);

/// Sampled family against an orthonormal reference list (first d used).
CodeFromFamily onb_to_code(std::span<const SampledFunction> family, std::span<const SampledFunction> basis, int d,
                           double eps, std::optional<double> eta = std::nullopt);
CodeFromFamily onb_to_code(std::span<const SampledFunction> family, const PswfBasis& basis, int d, double eps,
                           std::optional<double> eta = std::nullopt);
CodeFromFamily onb_to_code(std::span<const SampledFunction> family, const HermiteBasis& basis, int d, double eps,
                           std::optional<double> eta = std::nullopt);

/// Same construction in K^n: columns of `family` against an orthonormal
/// basis (columns of `basis`) of a subspace.
CodeFromFamily onb_to_code(const Eigen::MatrixXcd& family, const Eigen::MatrixXcd& basis, double eps,
                           std::optional<double> eta = std::nullopt);

/// Orthonormal basis (columns) of the complement of (1, ..., 1) in R^n.
Eigen::MatrixXd helmert_basis(int n);

/// The canonical basis of R^n against the complement of (1, ..., 1): every
/// residual is 1/sqrt(n) and the projected vectors form a simplex code.
struct CanonicalExample {
  int n = 0;
  std::vector<double> residuals;
  double coherence = 0.0;
  double alpha_bound = 0.0;  ///< eps^2 / (1 - eps^2) at eps = 1/sqrt(n)
};

CanonicalExample canonical_basis_example(int n);

/// Bound on the size of an eps,d-approximable orthonormal family:
/// code_upper_bound(eps^2 / (1 - eps^2), d). Requires 0 < eps < 1/sqrt(2).
CodeBoundReport approximable_family_bound(double eps, int d, Field field);

}  // namespace orthobound
