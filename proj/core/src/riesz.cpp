#include "orthobound/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

using std::numbers::pi;

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

double angle_constant(double norm_U, double norm_Uinv) {
  const double P = norm_U * norm_Uinv;
  return std::sqrt(2.0) * (1.0 - 1.0 / (P * P));
}

double angle_constant_min_form(double norm_U, double norm_Uinv) {
  const double r = norm_Uinv / norm_U;
  return std::sqrt(2.0) * std::min(1.0 - 1.0 / std::pow(norm_U * norm_Uinv, 2), r * r - 1.0);
}

OrthogonalizerStats orthogonalizer_stats(double norm_U, double norm_Uinv) {
  if (!(norm_U > 0.0) || !(norm_Uinv > 0.0) || !std::isfinite(norm_U) || !std::isfinite(norm_Uinv)) {
    throw DomainError("orthogonalizer norms must be positive and finite");
  }
  if (norm_U * norm_Uinv < 1.0 - 1e-12) {
    throw DomainError("inconsistent orthogonalizer norms: ||U|| ||U^-1|| = " + fmt(norm_U * norm_Uinv) + " < 1");
  }
  OrthogonalizerStats s;
  s.norm_U = norm_U;
  s.norm_Uinv = norm_Uinv;
  s.C_U = std::max(0.0, angle_constant(norm_U, norm_Uinv));
  return s;
}

double near_isometry_angle_bound(double beta) {
  return std::sqrt(2.0) * beta * (2.0 + beta) / ((1.0 + beta) * (1.0 + beta));
}

OrthogonalizerStats near_isometry_stats(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be a finite nonnegative number");
  const double r = std::sqrt(1.0 + beta);
  OrthogonalizerStats s = orthogonalizer_stats(r, r);
  s.near_isometry_beta = beta;
  return s;
}

OrthogonalizerStats estimate_stats(std::span<const SampledFunction> family) {
  if (family.empty()) throw PreconditionError("estimate_stats: empty family");
  const Eigen::MatrixXcd G = gram_matrix(family);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) throw PreconditionError("estimate_stats: family is linearly dependent on the grid");
  OrthogonalizerStats s = orthogonalizer_stats(1.0 / std::sqrt(lo), std::sqrt(hi));
  s.approximate = true;
  return s;
}

OrthogonalizerStats stats_from_mixing(const Eigen::MatrixXcd& mixing) {
  if (mixing.size() == 0) throw PreconditionError("stats_from_mixing: empty matrix");
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mixing);
  const auto& sv = svd.singularValues();
  const double smin = sv.minCoeff();
  if (!(smin > 0.0) || mixing.cols() > mixing.rows()) {
    throw PreconditionError("stats_from_mixing: mixing is not injective");
  }
  return orthogonalizer_stats(1.0 / smin, sv.maxCoeff());
}

RieszTraceCheck riesz_trace_bound(std::span<const SampledFunction> family, double norm_U) {
  if (!(norm_U > 0.0)) throw DomainError("riesz_trace_bound: ||U|| must be positive");
  RieszTraceCheck c;
  const auto m = static_cast<double>(family.size());
  c.lhs = m * m / (2.0 * pi);
  c.weak_lhs = m * (2.0 * m - 1.0) / (4.0 * pi);
  for (const auto& x : family) c.form_sum += hermite_form(x, FormMode::raw);
  c.rhs = norm_U * norm_U * c.form_sum;
  c.holds = c.lhs <= c.rhs + 1e-6 * std::max(1.0, c.lhs);
  c.weak_holds = c.weak_lhs <= c.rhs + 1e-6 * std::max(1.0, c.weak_lhs);
  return c;
}

RieszCount riesz_mean_dispersion_bound(double A, double norm_U) {
  if (!(A > 0.0) || !(norm_U > 0.0)) throw DomainError("riesz mean-dispersion bound needs A, ||U|| > 0");
  RieszCount c;
  c.A = A;
  c.norm_U = norm_U;
  c.headline = 8.0 * pi * A * A * norm_U * norm_U;
  c.n_max = static_cast<long long>(std::floor((2.0 * c.headline - 1.0) / 2.0));
  c.n_max_sharp = static_cast<long long>(std::floor(c.headline)) - 1;
  return c;
}

double riesz_minimax_lower(int n, double norm_U) {
  if (!(norm_U > 0.0)) throw DomainError("||U|| must be positive");
  return minimax_lower(n) / norm_U;
}

EpsCeiling riesz_eps_ceiling(const OrthogonalizerStats& s) {
  const double u = 1.0 / (s.norm_U * s.norm_U);
  const double v = s.C_U * s.norm_Uinv * s.norm_Uinv;
  if (!(u > v)) {
    throw DomainError("no admissible eps: C(U) ||U^-1||^2 = " + fmt(v) + " >= ||U||^-2 = " + fmt(u));
  }
  const double second = std::sqrt((u - v) / 2.0);
  if (u <= second) return {u, "||U||^-2"};
  return {second, "sqrt((||U||^-2 - C(U) ||U^-1||^2) / 2)"};
}

double riesz_alpha(double eps, const OrthogonalizerStats& s) {
  if (!(eps > 0.0)) throw DomainError("riesz_alpha: eps must be positive");
  const EpsCeiling ceiling = riesz_eps_ceiling(s);
  if (!(eps < ceiling.value)) {
    throw DomainError("riesz_alpha: eps = " + fmt(eps) + " violates eps < " + ceiling.binding + " = " +
                      fmt(ceiling.value));
  }
  const double u = 1.0 / (s.norm_U * s.norm_U);
  return (eps * eps + s.C_U * s.norm_Uinv * s.norm_Uinv) / (u - eps * eps);
}

double near_isometry_alpha_bound(double eps, double beta) {
  const double b = 1.0 + beta;
  return (b * eps * eps + std::sqrt(2.0) * beta * (2.0 + beta)) / (1.0 - b * eps * eps);
}

double max_admissible_beta() { return std::sqrt(1.0 + 1.0 / std::sqrt(2.0)) - 1.0; }

CodeFromFamily riesz_family_to_code(std::span<const SampledFunction> family, std::span<const SampledFunction> basis,
                                    int d, double eps, const OrthogonalizerStats& s) {
  if (family.empty()) throw PreconditionError("riesz_family_to_code: empty family");
  if (d < 1 || d > static_cast<int>(basis.size())) {
    throw DomainError("d = " + std::to_string(d) + " outside [1, " + std::to_string(basis.size()) + "]");
  }
  CodeFromFamily out;
  out.d = d;
  out.epsilon = eps;
  out.alpha_bound = riesz_alpha(eps, s);
  out.eta = std::sqrt(s.C_U);
  out.code.dim = d;
  const auto ref = basis.first(static_cast<std::size_t>(d));
  bool real = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const SampledFunction x = normalized(family[k]);
    const auto c = expansion_coefficients(x, ref);
    Eigen::VectorXcd v(d);
    double kept = 0.0;
    for (int j = 0; j < d; ++j) {
      v(j) = c[static_cast<std::size_t>(j)];
      kept += std::norm(v(j));
    }
    const double residual = std::sqrt(std::max(0.0, 1.0 - kept));
    if (!(residual < eps)) {
      throw PreconditionError("x_" + std::to_string(k) + " / ||x_" + std::to_string(k) + "|| has residual " +
                              fmt(residual) + " >= eps");
    }
    real = real && v.imag().cwiseAbs().maxCoeff() <= 1e-12;
    out.residuals.push_back(residual);
    out.coefficient_norms.push_back(v.norm());
    out.code.vectors.push_back(v / v.norm());
  }
  out.code.field = real ? Field::real : Field::complex;
  if (real) {
    for (auto& v : out.code.vectors) v = v.real().cast<complex>();
  }
  out.coherence = verify_code(out.code, out.alpha_bound).max_coherence;
  return out;
}

BoundReport umbrella_riesz_bound(const Envelope& phi, const Envelope& psi, double beta, std::optional<double> eps) {
  const OrthogonalizerStats stats = near_isometry_stats(beta);
  EpsCeiling ceiling;
  try {
    ceiling = riesz_eps_ceiling(stats);
  } catch (const DomainError&) {
    throw PreconditionError("umbrella-riesz: beta = " + fmt(beta) +
                            " admits no eps; the largest admissible beta is " + fmt(max_admissible_beta()));
  }
  const double M = std::min(phi.l2_norm(), psi.l2_norm());
  const double scale = 7.0 * M * (1.0 + beta);
  const double eps_max = std::min(1.0 / (50.0 * M), ceiling.value / scale * (1.0 - 1e-9));
  const double e = eps.value_or(eps_max);
  if (!(e > 0.0)) throw DomainError("umbrella-riesz: eps must be positive");
  if (e > eps_max * (1.0 + 1e-12)) {
    throw DomainError("umbrella-riesz: eps = " + fmt(e) + " exceeds the admissible maximum " + fmt(eps_max) +
                      " (ceiling " + ceiling.binding + ")");
  }

  BoundReport r = umbrella_bound(phi, psi, e);
  r.pipeline = "umbrella-riesz";
  r.inputs.push_back({"beta", beta});
  const double eps_R = scale * e;
  const double alpha_riesz = riesz_alpha(eps_R, stats);
  const double alpha_base = r.get("alpha");
  r.intermediates.push_back({"C_U", stats.C_U});
  r.intermediates.push_back({"eps_ceiling", ceiling.value});
  r.intermediates.push_back({"eps_R", eps_R});
  r.intermediates.push_back({"alpha_riesz", alpha_riesz});
  r.trace.push_back("eps_R = 7 eps M (1 + beta) = " + fmt(eps_R) + ", riesz alpha = " + fmt(alpha_riesz));
  if (alpha_riesz > alpha_base) {
    const auto d = static_cast<std::int64_t>(r.get("d"));
    r.code_bound = code_upper_bound({alpha_riesz, d, Field::complex});
    r.N = r.code_bound->best_upper;
    r.tight_method = to_string(r.code_bound->best_method);
    r.intermediates.push_back({"alpha_used", alpha_riesz});
    r.trace.push_back("riesz alpha dominates; N <= " + r.N.to_string() + " (" + r.tight_method + ")");
  } else {
    r.intermediates.push_back({"alpha_used", alpha_base});
    r.trace.push_back("orthonormal alpha dominates; N unchanged");
  }
  r.assertions.push_back({"eps_R below the riesz ceiling", eps_R < ceiling.value, fmt(eps_R)});
  return r;
}

BoundReport umbrella_riesz_best(const Envelope& phi, const Envelope& psi, double beta, int samples) {
  if (samples < 2) throw DomainError("umbrella-riesz search needs at least 2 samples");
  BoundReport best = umbrella_riesz_bound(phi, psi, beta);
  const double eps_max = best.get("eps");
  const double lo = std::log(eps_max * 1e-6);
  const double hi = std::log(eps_max);
  int evaluated = 1;
  for (int i = 0; i + 1 < samples; ++i) {
    const double e = std::exp(lo + (hi - lo) * i / (samples - 1));
    try {
      BoundReport r = umbrella_riesz_bound(phi, psi, beta, e);
      ++evaluated;
      if (r.N < best.N) best = std::move(r);
    } catch (const NumericalError&) {
    }
  }
  best.pipeline = "umbrella-riesz (eps scan)";
  best.trace.push_back("eps scan: " + std::to_string(evaluated) + " evaluations over [" + fmt(eps_max * 1e-6) +
                       ", " + fmt(eps_max) + "], best eps = " + fmt(best.get("eps")));
  return best;
}

std::vector<SampledFunction> mixed_family(std::span<const SampledFunction> basis, const Eigen::MatrixXcd& mixing) {
  if (static_cast<std::size_t>(mixing.rows()) > basis.size()) {
    throw PreconditionError("mixed_family: mixing has more rows than basis functions");
  }
  std::vector<SampledFunction> out;
  const auto ref = basis.first(static_cast<std::size_t>(mixing.rows()));
  for (Eigen::Index k = 0; k < mixing.cols(); ++k) {
    std::vector<complex> c(mixing.col(k).data(), mixing.col(k).data() + mixing.rows());
    out.push_back(synthesize(c, ref));
  }
  return out;
}

Eigen::MatrixXd random_mixing(int n, double smin, double smax, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_mixing: n must be positive");
  if (!(smin > 0.0) || !(smax >= smin)) throw DomainError("random_mixing: need 0 < smin <= smax");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(smin, smax);
  auto orthogonal = [&] {
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    // Sign fix so the distribution does not depend on the QR convention.
    const Eigen::VectorXd diag = qr.matrixQR().diagonal();
    for (int j = 0; j < n; ++j) {
      if (diag(j) < 0.0) q.col(j) *= -1.0;
    }
    return q;
  };
  Eigen::VectorXd s(n);
  for (int j = 0; j < n; ++j) s(j) = uniform(rng);
  s(0) = smax;
  if (n > 1) s(n - 1) = smin;
  return orthogonal() * s.asDiagonal() * orthogonal().transpose();
}

FrameWitness frame_witness(std::span<const SampledFunction> family, const OrthogonalizerStats& s, int trials,
                           std::uint64_t seed) {
  if (family.empty()) throw PreconditionError("frame_witness: empty family");
  const Eigen::MatrixXcd G = gram_matrix(family);
  const auto m = G.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  FrameWitness w;
  w.min_ratio = std::numeric_limits<double>::infinity();
  w.max_ratio = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd a(m);
    for (Eigen::Index i = 0; i < m; ++i) a(i) = complex(normal(rng), normal(rng));
    const double ratio = (a.adjoint() * G * a)(0).real() / a.squaredNorm();
    w.min_ratio = std::min(w.min_ratio, ratio);
    w.max_ratio = std::max(w.max_ratio, ratio);
  }
  const double lower = 1.0 / (s.norm_U * s.norm_U);
  const double upper = s.norm_Uinv * s.norm_Uinv;
  w.frame_holds = trials == 0 || (w.min_ratio >= lower * (1.0 - 1e-9) && w.max_ratio <= upper * (1.0 + 1e-9));
  w.max_angle_excess = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index l = 0; l < k; ++l) {
      const double bound = s.C_U * std::sqrt(G(k, k).real() * G(l, l).real());
      w.max_angle_excess = std::max(w.max_angle_excess, std::abs(G(k, l)) - bound);
    }
  }
  w.angles_hold = m < 2 || w.max_angle_excess <= 1e-8;
  if (m < 2) w.max_angle_excess = 0.0;
  return w;
}

}  // namespace orthobound
