#include "orthobound/numerics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "orthobound/error.hpp"

namespace orthobound {

complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  const Grid& grid = f.grid();
  complex acc{};
  for (std::size_t j = 0; j < grid.size(); ++j) acc += grid.weight(j) * f[j] * std::conj(g[j]);
  return acc;
}

double squared_norm(const SampledFunction& f) {
  const Grid& grid = f.grid();
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) acc += grid.weight(j) * std::norm(f[j]);
  return acc;
}

double norm(const SampledFunction& f) { return std::sqrt(squared_norm(f)); }

SampledFunction normalized(const SampledFunction& f) {
  const double n = norm(f);
  if (!(n > 0.0)) throw DomainError("cannot normalize a function with zero norm");
  return f * complex(1.0 / n);
}

Eigen::MatrixXcd gram_matrix(std::span<const SampledFunction> family) {
  const auto m = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXcd G(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    G(i, i) = squared_norm(family[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = i + 1; j < m; ++j) {
      G(i, j) = inner_product(family[static_cast<std::size_t>(i)], family[static_cast<std::size_t>(j)]);
      G(j, i) = std::conj(G(i, j));
    }
  }
  return G;
}

double orthonormality_defect(std::span<const SampledFunction> family) {
  const Eigen::MatrixXcd G = gram_matrix(family);
  const auto m = G.rows();
  return (G - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
}

double safe_floor(double x) { return std::floor(x >= 0.0 ? x * (1.0 + 1e-12) : x * (1.0 - 1e-12)); }

std::vector<complex> expansion_coefficients(const SampledFunction& f, std::span<const SampledFunction> basis) {
  std::vector<complex> c;
  c.reserve(basis.size());
  for (const auto& e : basis) c.push_back(inner_product(f, e));
  return c;
}

SampledFunction synthesize(std::span<const complex> coefficients, std::span<const SampledFunction> basis) {
  if (basis.empty()) throw DomainError("synthesize: empty basis");
  if (coefficients.size() > basis.size()) throw DomainError("synthesize: more coefficients than basis functions");
  SampledFunction out(basis.front().grid());
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const auto& e = basis[j];
    require_same_grid(out, e);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coefficients[j] * e[i];
  }
  return out;
}

namespace {

/// Model of a density on one grid cell [0, 1] (in units of the spacing):
/// the cubic through the four surrounding nodes when it stays nonnegative
/// on the cell, the chord otherwise. Either way the running integral is
/// monotone and the model is exact at the cell's nodes.
struct CellModel {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;

  static CellModel linear(double r0, double r1) { return {r0, r1 - r0, 0.0, 0.0}; }

  static CellModel fit(double rm, double r0, double r1, double r2) {
    const CellModel cubic{r0, -rm / 3.0 - r0 / 2.0 + r1 - r2 / 6.0, rm / 2.0 - r0 + r1 / 2.0,
                          (r2 - rm) / 6.0 + (r0 - r1) / 2.0};
    return cubic.min_on_cell() >= 0.0 ? cubic : linear(r0, r1);
  }

  double value(double u) const { return c0 + u * (c1 + u * (c2 + u * c3)); }
  double antiderivative(double u) const { return u * (c0 + u * (c1 / 2.0 + u * (c2 / 3.0 + u * c3 / 4.0))); }
  /// int_u^1 of the model.
  double upper_part(double u) const { return antiderivative(1.0) - antiderivative(u); }

  double min_on_cell() const {
    double m = std::min(value(0.0), value(1.0));
    // critical points of c1 + 2 c2 u + 3 c3 u^2
    const double a = 3.0 * c3, b = 2.0 * c2, c = c1;
    if (a == 0.0) {
      if (b != 0.0) {
        const double u = -c / b;
        if (u > 0.0 && u < 1.0) m = std::min(m, value(u));
      }
      return m;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return m;
    const double sq = std::sqrt(disc);
    for (double u : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
      if (u > 0.0 && u < 1.0) m = std::min(m, value(u));
    }
    return m;
  }
};

}  // namespace

TailEnergy tail_energy(const SampledFunction& f, double T) {
  if (T < 0.0) throw DomainError("tail_energy: T must be nonnegative");
  const Grid& grid = f.grid();
  if (T >= grid.half_width()) return {0.0, true};

  const std::size_t n = grid.size();
  const double h = grid.spacing();
  // Right tail int_T^L; the left tail is the right tail of the reflection.
  auto one_side = [&](bool right) {
    auto rho = [&](std::size_t j) { return std::norm(f[right ? j : n - 1 - j]); };
    auto model = [&](std::size_t j) {
      if (j == 0 || j + 2 >= n) return CellModel::linear(rho(j), rho(j + 1));
      return CellModel::fit(rho(j - 1), rho(j), rho(j + 1), rho(j + 2));
    };
    const double x = (T + grid.half_width()) / h;
    auto j0 = static_cast<std::size_t>(std::floor(x));
    if (j0 >= n - 1) j0 = n - 2;
    double acc = model(j0).upper_part(x - static_cast<double>(j0));
    for (std::size_t j = j0 + 1; j + 1 < n; ++j) acc += model(j).upper_part(0.0);
    return h * acc;
  };
  return {one_side(true) + one_side(false), false};
}

namespace {

struct Density {
  std::vector<double> t;
  std::vector<double> w;  // trapezoid weight times normalized |f|^2
  bool normalized_input = false;
};

Density density_of(const SampledFunction& f) {
  const double n2 = squared_norm(f);
  if (!(n2 > 0.0)) throw DomainError("p-statistics of a zero function are undefined");
  Density d;
  d.normalized_input = std::abs(n2 - 1.0) > 1e-10;
  const Grid& g = f.grid();
  d.t = g.points();
  d.w.resize(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) d.w[j] = g.weight(j) * std::norm(f[j]) / n2;
  return d;
}

double objective(const Density& d, double p, double a) {
  double acc = 0.0;
  for (std::size_t j = 0; j < d.t.size(); ++j) acc += d.w[j] * std::pow(std::abs(d.t[j] - a), p);
  return acc;
}

// d/da of the objective, nondecreasing in a.
double slope(const Density& d, double p, double a) {
  double acc = 0.0;
  for (std::size_t j = 0; j < d.t.size(); ++j) {
    const double x = d.t[j] - a;
    if (x == 0.0) continue;
    const double m = p * std::pow(std::abs(x), p - 1.0);
    acc += d.w[j] * (x > 0.0 ? -m : m);
  }
  return acc;
}

double minimizer(const Density& d, double p) {
  if (!(p > 1.0)) throw DomainError("p-mean requires p > 1");
  if (p == 2.0) {
    double m = 0.0;
    for (std::size_t j = 0; j < d.t.size(); ++j) m += d.w[j] * d.t[j];
    return m;
  }
  double lo = d.t.front();
  double hi = d.t.back();
  const double s_lo = slope(d, p, lo);
  const double s_hi = slope(d, p, hi);
  if (s_lo >= 0.0) return lo;
  if (s_hi <= 0.0) return hi;
  std::uintmax_t iters = 300;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-12 * std::max(1.0, std::abs(a)); };
  const auto [a, b] = boost::math::tools::toms748_solve(
      [&](double x) { return slope(d, p, x); }, lo, hi, s_lo, s_hi, tol, iters);
  return 0.5 * (a + b);
}

}  // namespace

double p_mean(const SampledFunction& f, double p) { return minimizer(density_of(f), p); }

PStats p_variance(const SampledFunction& f, double p) {
  const Density d = density_of(f);
  PStats s;
  s.p = p;
  s.mean = minimizer(d, p);
  s.variance = std::max(0.0, objective(d, p, s.mean));
  s.dispersion = std::sqrt(s.variance);
  s.normalized_input = d.normalized_input;

  // curvature of the objective at the minimizer, in units of its own scale
  const double scale = std::pow(std::max(s.variance, std::numeric_limits<double>::min()), 1.0 / p);
  const double floor = 0.5 * f.grid().spacing();
  double curvature = 0.0;
  for (std::size_t j = 0; j < d.t.size(); ++j) {
    const double x = std::max(std::abs(d.t[j] - s.mean), floor);
    curvature += d.w[j] * p * (p - 1.0) * std::pow(x, p - 2.0);
  }
  s.conditioning = s.variance > 0.0 ? curvature * scale * scale / s.variance : 0.0;
  return s;
}

double mean(const SampledFunction& f) { return p_mean(f, 2.0); }

double variance(const SampledFunction& f) { return p_variance(f, 2.0).variance; }

double second_moment(const SampledFunction& f) {
  const Grid& g = f.grid();
  double acc = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double t = g.point(j);
    acc += g.weight(j) * t * t * std::norm(f[j]);
  }
  return acc;
}

}  // namespace orthobound
