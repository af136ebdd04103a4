#pragma once

#include "orthobound/grid.hpp"

namespace orthobound {

/// Result of a grid Fourier transform. `aliasing_warning` is raised when the
/// input or output carries non-negligible energy in the outermost 2% of its
/// grid, i.e. the grid is too short or too coarse for the function's band.
struct Transformed {
  SampledFunction value;
  bool aliasing_warning = false;
};

/// Continuous-kernel transform  f^(xi) = int f(t) exp(-2 i pi t xi) dt,
/// evaluated exactly for the Riemann sum h * sum_j f(t_j) exp(-2 i pi t_j xi_k)
/// on the dual grid (FFT plus phase corrections).
Transformed fourier_transform(const SampledFunction& f);

/// Inverse of fourier_transform: kernel exp(+2 i pi t xi). Returns values on
/// the dual of f.grid() (which is the original time grid for a spectrum).
Transformed inverse_fourier_transform(const SampledFunction& spectrum);

/// Riemann-sum transform evaluated at an arbitrary frequency; O(n). Used
/// where a spectrum is needed off the dual grid (quadrature nodes).
complex fourier_at(const SampledFunction& f, double xi);

}  // namespace orthobound
