#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "orthobound/fourier.hpp"
#include "orthobound/grid.hpp"

namespace orthobound {

/// Trapezoid approximation of int f conj(g). Throws PreconditionError on
/// grid mismatch.
complex inner_product(const SampledFunction& f, const SampledFunction& g);

double squared_norm(const SampledFunction& f);
double norm(const SampledFunction& f);

/// f / ||f||. Throws DomainError for a zero function.
SampledFunction normalized(const SampledFunction& f);

/// Gram matrix G(i, j) = <f_i, f_j>.
Eigen::MatrixXcd gram_matrix(std::span<const SampledFunction> family);

/// Largest |G - I| entry of the Gram matrix.
double orthonormality_defect(std::span<const SampledFunction> family);

struct TailEnergy {
  double energy = 0.0;
  /// T is at or beyond the grid half-width: the returned energy is 0 but the
  /// true tail is unknown.
  bool truncated = false;
};

/// int_{|t|>T} |f(t)|^2 dt from piecewise-cubic interpolation of |f|^2
/// (linear on cells where the cubic would dip below zero). Fourth order in
/// the spacing for smooth densities, continuous and nonincreasing in T.
TailEnergy tail_energy(const SampledFunction& f, double T);

/// p-mean, p-variance and p-dispersion of the density |f|^2 / ||f||^2.
struct PStats {
  double p = 2.0;
  double mean = 0.0;
  double variance = 0.0;
  double dispersion = 0.0;
  /// Input was not unit norm and was normalized internally.
  bool normalized_input = false;
  /// Second derivative of the objective at the minimizer divided by the
  /// objective value; small values mean a flat objective (p near 1).
  double conditioning = 0.0;
};

/// Unique minimizer of a -> int |t - a|^p |f|^2 dt for p > 1, found by
/// bracketed root finding on the (increasing) derivative over the grid span.
double p_mean(const SampledFunction& f, double p);

PStats p_variance(const SampledFunction& f, double p);

/// Ordinary mean and variance (p = 2) of |f|^2 / ||f||^2.
double mean(const SampledFunction& f);
double variance(const SampledFunction& f);

/// floor(x) that tolerates representation error just below an integer
/// (4 * 0.7 * (1 / 0.7) must count as 4): floor(x (1 + 1e-12)) for x >= 0.
double safe_floor(double x);

/// <f, e_j> for each member of an orthonormal list.
std::vector<complex> expansion_coefficients(const SampledFunction& f, std::span<const SampledFunction> basis);

/// sum_j c_j e_j on the grid of the basis.
SampledFunction synthesize(std::span<const complex> coefficients, std::span<const SampledFunction> basis);

/// int t^2 |f(t)|^2 dt (no normalization).
double second_moment(const SampledFunction& f);

}  // namespace orthobound
