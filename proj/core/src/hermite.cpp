#include "orthobound/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "orthobound/error.hpp"
#include "orthobound/fourier.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

using std::numbers::pi;

double hermite_eigenvalue(int k) { return (2.0 * k + 1.0) / (2.0 * pi); }

std::vector<double> hermite_functions(int count, double t) {
  if (count < 1) throw DomainError("hermite_functions: count must be at least 1");
  // h_k(t) = (2 pi)^{1/4} psi_k(sqrt(2 pi) t) with psi_k the standard
  // Hermite functions orthonormal in dx.
  const double x = std::sqrt(2.0 * pi) * t;
  std::vector<double> h(static_cast<std::size_t>(count));
  h[0] = std::pow(2.0, 0.25) * std::exp(-0.5 * x * x);
  if (count > 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int k = 1; k + 1 < count; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    h[kk + 1] = std::sqrt(2.0 / (k + 1.0)) * x * h[kk] - std::sqrt(k / (k + 1.0)) * h[kk - 1];
  }
  return h;
}

double hermite_function(int k, double t) {
  if (k < 0) throw DomainError("hermite_function: negative index");
  return hermite_functions(k + 1, t).back();
}

HermiteBasis build_hermite_basis(int count, const Grid& grid, double tolerance) {
  if (count < 1) throw DomainError("build_hermite_basis: K must be at least 1");
  const auto K = static_cast<std::size_t>(count);
  std::vector<std::vector<complex>> values(K, std::vector<complex>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto h = hermite_functions(count, grid.point(j));
    for (std::size_t k = 0; k < K; ++k) values[k][j] = h[k];
  }
  HermiteBasis basis{grid, {}, 0.0};
  basis.functions.reserve(K);
  for (auto& v : values) basis.functions.emplace_back(grid, std::move(v));

  const Eigen::MatrixXcd G = gram_matrix(basis.functions);
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      row = std::max(row, std::abs(G(i, j) - (i == j ? 1.0 : 0.0)));
    }
    basis.gram_residual = std::max(basis.gram_residual, row);
    if (row > tolerance) {
      throw NumericalError("build_hermite_basis: h_" + std::to_string(i) +
                           " is not resolved by the grid (Gram residual " + std::to_string(row) + ")");
    }
  }
  return basis;
}

namespace {

// <Hf, g> via moments of f, g and their spectra.
complex hermite_pairing(const SampledFunction& f, const SampledFunction& g,
                        const SampledFunction& fhat, const SampledFunction& ghat) {
  auto weighted = [](const SampledFunction& a, const SampledFunction& b) {
    const Grid& grid = a.grid();
    complex acc{};
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double t = grid.point(j);
      acc += grid.weight(j) * t * t * a[j] * std::conj(b[j]);
    }
    return acc;
  };
  return weighted(f, g) + weighted(fhat, ghat);
}

void require_orthonormal(std::span<const SampledFunction> family, const char* who) {
  if (family.empty()) throw PreconditionError(std::string(who) + ": empty family");
  const double defect = orthonormality_defect(family);
  if (defect > 1e-6) {
    throw PreconditionError(std::string(who) + ": family is not orthonormal (Gram defect " +
                            std::to_string(defect) + ")");
  }
}

}  // namespace

SampledFunction apply_hermite_operator(const SampledFunction& f) {
  SampledFunction fhat = fourier_transform(f).value;
  const Grid& dual = fhat.grid();
  for (std::size_t j = 0; j < dual.size(); ++j) fhat[j] *= dual.point(j) * dual.point(j);
  SampledFunction out = inverse_fourier_transform(fhat).value;
  const Grid& g = f.grid();
  for (std::size_t j = 0; j < g.size(); ++j) out[j] += g.point(j) * g.point(j) * f[j];
  return SampledFunction(g, {out.values().begin(), out.values().end()});
}

double hermite_form(const SampledFunction& f, FormMode mode) {
  if (mode == FormMode::unit_norm) {
    const double n2 = squared_norm(f);
    if (std::abs(n2 - 1.0) > 1e-6) {
      throw PreconditionError("hermite_form: input must have unit norm (||f||^2 = " + std::to_string(n2) + ")");
    }
  }
  const SampledFunction fhat = fourier_transform(f).value;
  return second_moment(f) + second_moment(fhat);
}

TraceCheck rayleigh_ritz_trace(std::span<const SampledFunction> family) {
  require_orthonormal(family, "rayleigh_ritz_trace");
  const auto m = static_cast<Eigen::Index>(family.size());
  std::vector<SampledFunction> spectra;
  spectra.reserve(family.size());
  for (const auto& f : family) spectra.push_back(fourier_transform(f).value);

  Eigen::MatrixXcd M(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j; k < m; ++k) {
      const auto uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k);
      M(j, k) = hermite_pairing(family[uj], family[uk], spectra[uj], spectra[uk]);
      M(k, j) = std::conj(M(j, k));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(M, Eigen::EigenvaluesOnly);

  TraceCheck out;
  for (Eigen::Index k = 0; k < m; ++k) {
    out.lhs += hermite_eigenvalue(static_cast<int>(k));
    out.rhs += M(k, k).real();
    out.matrix_eigenvalues.push_back(eig.eigenvalues()(k));
  }
  out.holds = out.lhs <= out.rhs + 1e-6 * std::max(1.0, out.lhs);
  return out;
}

double sharp_bound(int n) { return (n + 1.0) * (n + 1.0) / (2.0 * pi); }

double weak_bound(int n) { return (n + 1.0) * (2.0 * n + 1.0) / (4.0 * pi); }

ConcentrationSummary sharp_mean_dispersion_check(std::span<const SampledFunction> family) {
  require_orthonormal(family, "sharp_mean_dispersion_check");
  ConcentrationSummary out;
  double running = 0.0;
  bool prefix = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const SampledFunction fhat = fourier_transform(family[k]).value;
    const PStats st = p_variance(family[k], 2.0);
    const PStats sf = p_variance(fhat, 2.0);
    ConcentrationRecord r{st.mean, sf.mean, st.variance, sf.variance, 0.0};
    r.form = r.variance_time + r.variance_frequency + r.mean_time * r.mean_time +
             r.mean_frequency * r.mean_frequency;
    out.records.push_back(r);

    running += r.form;
    const double bound = sharp_bound(static_cast<int>(k));
    out.running_sums.push_back(running);
    out.bounds.push_back(bound);
    const bool eq = std::abs(running - bound) <= kEqualityTolerance * bound;
    out.equality.push_back(eq);
    if (prefix && eq) {
      out.equality_prefix = static_cast<int>(k);
    } else {
      prefix = false;
    }
  }

  if (out.equality_prefix >= 0) {
    const Grid& grid = family.front().grid();
    const HermiteBasis h = build_hermite_basis(out.equality_prefix + 1, grid, 1e-6);
    out.hermite_identified = true;
    for (int k = 0; k <= out.equality_prefix; ++k) {
      const double overlap = std::abs(inner_product(family[static_cast<std::size_t>(k)],
                                                    h.functions[static_cast<std::size_t>(k)]));
      out.hermite_overlaps.push_back(overlap);
      if (std::abs(overlap - 1.0) > 1e-4) out.hermite_identified = false;
    }
  }
  return out;
}

double heisenberg_product(const SampledFunction& f) {
  const SampledFunction g = normalized(f);
  const SampledFunction ghat = fourier_transform(g).value;
  return std::sqrt(variance(g) * variance(ghat));
}

}  // namespace orthobound
