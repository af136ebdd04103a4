#include "orthobound/pswf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "orthobound/error.hpp"
#include "orthobound/fourier.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

using std::numbers::pi;

namespace {

// Legendre index of the i-th coefficient in a parity block.
int degree(int parity, std::size_t i) { return parity + 2 * static_cast<int>(i); }

// Eigenpairs of the commuting operator restricted to one parity, ascending
// in chi. Normalized Legendre basis sqrt(k + 1/2) P_k.
std::vector<PswfBasis::Mode> solve_block(double c, int parity, int wanted) {
  const int size = wanted + static_cast<int>(std::ceil(c)) + 30;
  const double c2 = c * c;
  Eigen::VectorXd diag(size), off(size - 1);
  for (int i = 0; i < size; ++i) {
    const double k = degree(parity, static_cast<std::size_t>(i));
    diag(i) = k * (k + 1.0) + c2 * (2.0 * k * (k + 1.0) - 1.0) / ((2.0 * k + 3.0) * (2.0 * k - 1.0));
    if (i + 1 < size) {
      off(i) = c2 * (k + 2.0) * (k + 1.0) / ((2.0 * k + 3.0) * std::sqrt((2.0 * k + 1.0) * (2.0 * k + 5.0)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericalError("prolate eigensolve did not converge");

  std::vector<PswfBasis::Mode> modes;
  for (int m = 0; m < wanted; ++m) {
    PswfBasis::Mode mode;
    mode.parity = parity;
    mode.chi = es.eigenvalues()(m);
    mode.beta.assign(es.eigenvectors().col(m).data(), es.eigenvectors().col(m).data() + size);

    // S(0) for even modes, S'(0) for odd ones, via P_k(0) and P_k'(0) = k P_{k-1}(0).
    double at_zero = 0.0;
    double p0 = 1.0;  // P_{2j}(0)
    for (std::size_t i = 0; i < mode.beta.size(); ++i) {
      const int k = degree(parity, i);
      if (parity == 0) {
        if (k > 0) p0 *= -(k - 1.0) / k;
        at_zero += mode.beta[i] * std::sqrt(k + 0.5) * p0;
      } else {
        if (k > 1) p0 *= -(k - 2.0) / (k - 1.0);
        at_zero += mode.beta[i] * std::sqrt(k + 0.5) * k * p0;
      }
    }
    if (at_zero < 0.0) {
      for (auto& b : mode.beta) b = -b;
      at_zero = -at_zero;
    }
    mode.mu = parity == 0 ? std::sqrt(2.0) * mode.beta[0] / at_zero
                          : c * std::sqrt(2.0 / 3.0) * mode.beta[0] / at_zero;
    modes.push_back(std::move(mode));
  }
  return modes;
}

std::vector<PswfBasis::Mode> solve_modes(double c, int count) {
  const int even = (count + 1) / 2;
  const int odd = count / 2;
  auto e = solve_block(c, 0, even);
  auto o = odd > 0 ? solve_block(c, 1, odd) : std::vector<PswfBasis::Mode>{};
  std::vector<PswfBasis::Mode> all;
  all.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    auto& src = (n % 2 == 0) ? e : o;
    all.push_back(std::move(src[static_cast<std::size_t>(n / 2)]));
  }
  return all;
}

double raw_lambda(double c, const PswfBasis::Mode& m) { return c * m.mu * m.mu / (2.0 * pi); }

void validate(double T, double Omega) {
  if (!(T > 0.0) || !(Omega > 0.0) || !std::isfinite(T) || !std::isfinite(Omega)) {
    throw DomainError("T and Omega must be positive and finite");
  }
}

// Normalized Legendre values sqrt(k + 1/2) P_k(x), k = 0..kmax.
std::vector<double> legendre_table(int kmax, double x) {
  std::vector<double> p(static_cast<std::size_t>(kmax) + 1);
  double pm = 1.0, pk = x;
  p[0] = std::sqrt(0.5);
  if (kmax >= 1) p[1] = std::sqrt(1.5) * x;
  for (int k = 1; k < kmax; ++k) {
    const double next = ((2.0 * k + 1.0) * x * pk - k * pm) / (k + 1.0);
    pm = pk;
    pk = next;
    p[static_cast<std::size_t>(k) + 1] = std::sqrt(k + 1.5) * next;
  }
  return p;
}

// Spherical Bessel j_0..j_kmax at z > 0 by backward recurrence, normalized
// with sum (2k + 1) j_k^2 = 1.
std::vector<double> spherical_bessel_table(int kmax, double z) {
  const int start = std::max(kmax, static_cast<int>(z)) + 40 + static_cast<int>(4.0 * std::cbrt(z));
  std::vector<double> r(static_cast<std::size_t>(start) + 2, 0.0);
  r[static_cast<std::size_t>(start)] = 1e-30;
  for (int k = start; k > 0; --k) {
    const auto uk = static_cast<std::size_t>(k);
    r[uk - 1] = (2.0 * k + 1.0) / z * r[uk] - r[uk + 1];
    if (std::abs(r[uk - 1]) > 1e100) {
      for (std::size_t i = uk - 1; i < r.size(); ++i) r[i] *= 1e-100;
    }
  }
  double s = 0.0;
  for (int k = start; k >= 0; --k) s += (2.0 * k + 1.0) * r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)];
  const double j0 = std::sin(z) / z;
  const double j1 = std::sin(z) / (z * z) - std::cos(z) / z;
  const double sign = std::abs(j0) >= std::abs(j1) ? (j0 * r[0] >= 0.0 ? 1.0 : -1.0)
                                                   : (j1 * r[1] >= 0.0 ? 1.0 : -1.0);
  const double scale = sign / std::sqrt(s);
  r.resize(static_cast<std::size_t>(kmax) + 1);
  for (auto& v : r) v *= scale;
  return r;
}

int max_degree(const PswfBasis::Mode& m) { return degree(m.parity, m.beta.size() - 1); }

double legendre_sum(const PswfBasis::Mode& m, const std::vector<double>& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.beta.size(); ++i) acc += m.beta[i] * p[static_cast<std::size_t>(degree(m.parity, i))];
  return acc;
}

// int_{-1}^{1} e^{i c x y} S(y) dy (divided by i for odd modes), from the
// table j_k(c|x|) and the sign of x.
double transform_sum(const PswfBasis::Mode& m, const std::vector<double>& j, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.beta.size(); ++i) {
    const int k = degree(m.parity, i);
    const double phase = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    acc += 2.0 * m.beta[i] * std::sqrt(k + 0.5) * phase * j[static_cast<std::size_t>(k)];
  }
  // j_k(-z) = (-1)^k j_k(z)
  return (x < 0.0 && m.parity == 1) ? -acc : acc;
}

}  // namespace

double PswfBasis::bandwidth() const { return 2.0 * pi * T * Omega; }

double PswfBasis::legendre_value(int n, double x) const {
  const auto& m = modes.at(static_cast<std::size_t>(n));
  return legendre_sum(m, legendre_table(max_degree(m), x));
}

double PswfBasis::extended_value(int n, double x) const {
  const auto& m = modes.at(static_cast<std::size_t>(n));
  if (std::abs(x) <= 1.0) return legendre_sum(m, legendre_table(max_degree(m), x));
  const double c = bandwidth();
  return transform_sum(m, spherical_bessel_table(max_degree(m), c * std::abs(x)), x) / m.mu;
}

double PswfBasis::value(int n, double t) const {
  const auto& m = modes.at(static_cast<std::size_t>(n));
  const double x = t / T;
  if (std::abs(x) <= 1.0) return std::sqrt(raw_lambda(bandwidth(), m) / T) * legendre_value(n, x);
  // sqrt(lambda / T) / mu = sign(mu) sqrt(Omega): no division by a small mu.
  const double c = bandwidth();
  const double s = m.mu >= 0.0 ? 1.0 : -1.0;
  return s * std::sqrt(Omega) * transform_sum(m, spherical_bessel_table(max_degree(m), c * std::abs(x)), x);
}

complex PswfBasis::fourier_value(int n, double xi) const {
  if (std::abs(xi) > Omega) return {};
  const auto& m = modes.at(static_cast<std::size_t>(n));
  const double s = (m.mu >= 0.0 ? 1.0 : -1.0) / std::sqrt(Omega);
  const double v = s * legendre_value(n, xi / Omega);
  return m.parity == 0 ? complex(v, 0.0) : complex(0.0, -v);
}

Eigen::MatrixXd PswfBasis::l2_gram(int d) const {
  if (d < 0 || d > d_max()) throw DomainError("l2_gram: d out of range");
  constexpr int panels = 16;
  using rule = boost::math::quadrature::gauss<double, 30>;
  const double w = 2.0 * Omega / panels;
  // sample every function once per node
  std::vector<double> nodes, weights;
  for (int p = 0; p < panels; ++p) {
    const double a = -Omega + p * w;
    for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
      const double x = rule::abscissa()[i];
      const double wt = rule::weights()[i] * 0.5 * w;
      nodes.push_back(a + 0.5 * w * (1.0 + x));
      weights.push_back(wt);
      if (x != 0.0) {
        nodes.push_back(a + 0.5 * w * (1.0 - x));
        weights.push_back(wt);
      }
    }
  }
  Eigen::MatrixXcd V(static_cast<Eigen::Index>(nodes.size()), d);
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    for (int n = 0; n < d; ++n) V(static_cast<Eigen::Index>(q), n) = fourier_value(n, nodes[q]);
  }
  Eigen::VectorXd wv = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  const Eigen::MatrixXcd G = V.adjoint() * wv.asDiagonal() * V;
  return G.real();
}

std::vector<double> prolate_eigenvalues(double T, double Omega, int count) {
  validate(T, Omega);
  if (count < 1) throw DomainError("prolate_eigenvalues: count must be positive");
  const double c = 2.0 * pi * T * Omega;
  const auto modes = solve_modes(c, count);
  std::vector<double> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(std::clamp(raw_lambda(c, m), 0.0, 1.0));
  return out;
}

int landau_pollak_dimension(double T, double Omega) {
  return static_cast<int>(safe_floor(4.0 * T * Omega)) + 1;
}

PswfBasis build_pswf_basis(double T, double Omega, int d_max, const Grid& grid) {
  validate(T, Omega);
  const int needed = landau_pollak_dimension(T, Omega) + 1;
  if (d_max < needed) {
    throw PreconditionError("build_pswf_basis: d_max must be at least floor(4 T Omega) + 2 = " +
                            std::to_string(needed));
  }
  PswfBasis basis;
  basis.T = T;
  basis.Omega = Omega;
  basis.grid = grid;
  const double c = basis.bandwidth();
  basis.modes = solve_modes(c, d_max);

  double previous = std::nextafter(1.0, 0.0);
  for (int n = 0; n < d_max; ++n) {
    const double lam = raw_lambda(c, basis.modes[static_cast<std::size_t>(n)]);
    if (!(lam >= kPlungeCutoff)) {
      throw NumericalError("build_pswf_basis: lambda_" + std::to_string(n) + " is below " +
                           std::to_string(kPlungeCutoff) + "; max reliable index is " + std::to_string(n - 1));
    }
    previous = std::min(previous, lam);
    basis.lambdas.push_back(previous);
  }

  int kmax = 0;
  for (const auto& m : basis.modes) kmax = std::max(kmax, max_degree(m));
  std::vector<std::vector<complex>> values(static_cast<std::size_t>(d_max), std::vector<complex>(grid.size()));
  std::vector<double> inside_scale(static_cast<std::size_t>(d_max)), outside_scale(static_cast<std::size_t>(d_max));
  for (int n = 0; n < d_max; ++n) {
    const auto& m = basis.modes[static_cast<std::size_t>(n)];
    inside_scale[static_cast<std::size_t>(n)] = std::sqrt(raw_lambda(c, m) / T);
    outside_scale[static_cast<std::size_t>(n)] = (m.mu >= 0.0 ? 1.0 : -1.0) * std::sqrt(Omega);
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.point(j) / T;
    if (std::abs(x) <= 1.0) {
      const auto p = legendre_table(kmax, x);
      for (std::size_t n = 0; n < values.size(); ++n) values[n][j] = inside_scale[n] * legendre_sum(basis.modes[n], p);
    } else {
      const auto b = spherical_bessel_table(kmax, c * std::abs(x));
      for (std::size_t n = 0; n < values.size(); ++n) {
        values[n][j] = outside_scale[n] * transform_sum(basis.modes[n], b, x);
      }
    }
  }
  basis.functions.reserve(values.size());
  for (auto& v : values) basis.functions.emplace_back(grid, std::move(v));
  return basis;
}

std::vector<complex> pswf_coefficients(const SampledFunction& f, const PswfBasis& basis, int d) {
  if (d < 0 || d > basis.d_max()) {
    throw DomainError("d = " + std::to_string(d) + " outside [0, " + std::to_string(basis.d_max()) + "]");
  }
  return expansion_coefficients(f, std::span(basis.functions).first(static_cast<std::size_t>(d)));
}

SampledFunction project(const SampledFunction& f, const PswfBasis& basis, int d) {
  const auto c = pswf_coefficients(f, basis, d);
  if (d == 0) return SampledFunction(basis.grid);
  return synthesize(c, basis.functions);
}

double projection_residual(const SampledFunction& f, const PswfBasis& basis, int d) {
  const auto c = pswf_coefficients(f, basis, d);
  double kept = 0.0;
  for (const auto& v : c) kept += std::norm(v);
  return std::sqrt(std::max(0.0, squared_norm(f) - kept));
}

double in_P_class(const SampledFunction& f, double T, double Omega, FormMode mode) {
  if (!(T >= 0.0) || !(Omega >= 0.0)) throw DomainError("in_P_class: T and Omega must be nonnegative");
  if (mode == FormMode::unit_norm) {
    const double n2 = squared_norm(f);
    if (std::abs(n2 - 1.0) > 1e-6) {
      throw PreconditionError("in_P_class: input must have unit norm (||f||^2 = " + std::to_string(n2) + ")");
    }
  }
  const double time = tail_energy(f, T).energy;
  const double freq = tail_energy(fourier_transform(f).value, Omega).energy;
  return std::sqrt(std::max(time, freq));
}

ApproximabilityReport landau_pollak_check(const SampledFunction& f, double T, double Omega, double eps,
                                          const PswfBasis& basis) {
  validate(T, Omega);
  if (!(eps > 0.0)) throw DomainError("landau_pollak_check: eps must be positive");
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); };
  if (!close(T, basis.T) || !close(Omega, basis.Omega)) {
    throw PreconditionError("landau_pollak_check: basis was built for different (T, Omega)");
  }
  ApproximabilityReport r;
  r.epsilon = eps;
  r.d = landau_pollak_dimension(T, Omega);
  if (r.d > basis.d_max()) throw PreconditionError("landau_pollak_check: basis has fewer than d functions");
  r.attained_epsilon = in_P_class(f, T, Omega);
  if (r.attained_epsilon > eps * (1.0 + 1e-9)) {
    throw PreconditionError("landau_pollak_check: f is not in P_{T,Omega,eps}; attained eps = " +
                            std::to_string(r.attained_epsilon));
  }
  r.residual = projection_residual(f, basis, r.d);
  r.threshold = 7.0 * eps;
  r.member_of_S = r.residual < r.threshold;
  return r;
}

}  // namespace orthobound
