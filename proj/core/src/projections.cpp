#include "orthobound/projections.hpp"

#include <cmath>
#include <string>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

namespace {

constexpr double kUnitTolerance = 1e-6;

void check_eps(double eps) {
  if (!(eps > 0.0) || !(eps * eps < 0.5)) throw DomainError("eps must lie in (0, 1/sqrt(2))");
}

}  // namespace

CodeFromFamily code_from_coefficients(const Eigen::MatrixXcd& coefficients, std::span<const double> residuals,
                                      const Eigen::MatrixXcd& gram, double eps, std::optional<double> eta) {
  check_eps(eps);
  const auto m = coefficients.cols();
  if (static_cast<Eigen::Index>(residuals.size()) != m || gram.rows() != m || gram.cols() != m) {
    throw PreconditionError("code_from_coefficients: inconsistent family sizes");
  }
  if (m == 0) throw PreconditionError("code_from_coefficients: empty family");
  double off = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    if (std::abs(gram(k, k).real() - 1.0) > kUnitTolerance) {
      throw PreconditionError("f_" + std::to_string(k) + " is not unit norm (||f||^2 = " +
                              std::to_string(gram(k, k).real()) + ")");
    }
    if (!(residuals[static_cast<std::size_t>(k)] < eps)) {
      throw PreconditionError("f_" + std::to_string(k) + " has residual " +
                              std::to_string(residuals[static_cast<std::size_t>(k)]) + " >= eps");
    }
    for (Eigen::Index j = 0; j < k; ++j) off = std::max(off, std::abs(gram(j, k)));
  }

  CodeFromFamily out;
  out.d = static_cast<int>(coefficients.rows());
  out.epsilon = eps;
  if (eta) {
    if (!(*eta >= 0.0)) throw DomainError("eta must be nonnegative");
    for (Eigen::Index k = 0; k < m; ++k) {
      for (Eigen::Index j = 0; j < k; ++j) {
        if (std::abs(gram(j, k)) > *eta * *eta + 1e-12) {
          throw PreconditionError("|<f_" + std::to_string(j) + ", f_" + std::to_string(k) + ">| = " +
                                  std::to_string(std::abs(gram(j, k))) + " exceeds eta^2");
        }
      }
    }
    out.eta = *eta;
  } else {
    out.eta = std::sqrt(off);
    out.eta_estimated = true;
  }
  out.alpha_bound = (eps * eps + out.eta * out.eta) / (1.0 - eps * eps);

  const bool real = coefficients.imag().cwiseAbs().maxCoeff() <= 1e-12;
  out.code.dim = out.d;
  out.code.field = real ? Field::real : Field::complex;
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::VectorXcd v = coefficients.col(k);
    if (real) v = v.real().cast<complex>();
    const double n = v.norm();
    if (!(n > 0.0)) throw PreconditionError("f_" + std::to_string(k) + " projects to zero");
    out.coefficient_norms.push_back(n);
    out.residuals.push_back(residuals[static_cast<std::size_t>(k)]);
    out.code.vectors.push_back(v / n);
  }
  out.coherence = verify_code(out.code, out.alpha_bound).max_coherence;
  return out;
}

CodeFromFamily onb_to_code(std::span<const SampledFunction> family, std::span<const SampledFunction> basis, int d,
                           double eps, std::optional<double> eta) {
  if (d < 1 || d > static_cast<int>(basis.size())) {
    throw DomainError("d = " + std::to_string(d) + " outside [1, " + std::to_string(basis.size()) + "]");
  }
  if (family.empty()) throw PreconditionError("onb_to_code: empty family");
  const auto ref = basis.first(static_cast<std::size_t>(d));
  const auto m = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXcd V(d, m);
  std::vector<double> residuals;
  const Eigen::MatrixXcd G = gram_matrix(family);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto c = expansion_coefficients(family[static_cast<std::size_t>(k)], ref);
    double kept = 0.0;
    for (int j = 0; j < d; ++j) {
      V(j, k) = c[static_cast<std::size_t>(j)];
      kept += std::norm(c[static_cast<std::size_t>(j)]);
    }
    residuals.push_back(std::sqrt(std::max(0.0, G(k, k).real() - kept)));
  }
  return code_from_coefficients(V, residuals, G, eps, eta);
}

CodeFromFamily onb_to_code(std::span<const SampledFunction> family, const PswfBasis& basis, int d, double eps,
                           std::optional<double> eta) {
  return onb_to_code(family, std::span<const SampledFunction>(basis.functions), d, eps, eta);
}

CodeFromFamily onb_to_code(std::span<const SampledFunction> family, const HermiteBasis& basis, int d, double eps,
                           std::optional<double> eta) {
  return onb_to_code(family, std::span<const SampledFunction>(basis.functions), d, eps, eta);
}

CodeFromFamily onb_to_code(const Eigen::MatrixXcd& family, const Eigen::MatrixXcd& basis, double eps,
                           std::optional<double> eta) {
  if (family.rows() != basis.rows()) throw PreconditionError("onb_to_code: ambient dimensions differ");
  const Eigen::MatrixXcd V = basis.adjoint() * family;
  const Eigen::MatrixXcd G = family.adjoint() * family;
  std::vector<double> residuals;
  for (Eigen::Index k = 0; k < family.cols(); ++k) {
    residuals.push_back((family.col(k) - basis * V.col(k)).norm());
  }
  return code_from_coefficients(V, residuals, G, eps, eta);
}

Eigen::MatrixXd helmert_basis(int n) {
  if (n < 2) throw DomainError("helmert_basis: n must be at least 2");
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) B(i, k - 1) = s;
    B(k, k - 1) = -k * s;
  }
  return B;
}

CanonicalExample canonical_basis_example(int n) {
  const Eigen::MatrixXd B = helmert_basis(n);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd V = B.transpose() * I;
  CanonicalExample ex;
  ex.n = n;
  for (int k = 0; k < n; ++k) ex.residuals.push_back((I.col(k) - B * V.col(k)).norm());
  SphericalCode code{n - 1, Field::real, {}};
  for (int k = 0; k < n; ++k) code.vectors.push_back(V.col(k).normalized().cast<complex>());
  const double eps2 = 1.0 / n;
  ex.alpha_bound = eps2 / (1.0 - eps2);
  ex.coherence = verify_code(code, ex.alpha_bound).max_coherence;
  return ex;
}

CodeBoundReport approximable_family_bound(double eps, int d, Field field) {
  check_eps(eps);
  return code_upper_bound({eps * eps / (1.0 - eps * eps), d, field});
}

}  // namespace orthobound
