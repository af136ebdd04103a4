#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace orthobound {

using complex = std::complex<double>;

/// Uniform symmetric grid t_j = -L + j h on [-L, L], h = 2L / (n - 1).
class Grid {
 public:
  static constexpr double kDefaultHalfWidth = 16.0;
  static constexpr std::size_t kDefaultPoints = 4096;
  static constexpr std::size_t kMinPoints = 16;

  Grid() : Grid(kDefaultHalfWidth, kDefaultPoints) {}
  Grid(double half_width, std::size_t n_points);

  double half_width() const { return half_width_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return spacing_; }
  double point(std::size_t j) const { return -half_width_ + static_cast<double>(j) * spacing_; }
  std::vector<double> points() const;

  /// Trapezoid weight of node j.
  double weight(std::size_t j) const {
    return (j == 0 || j + 1 == n_points_) ? 0.5 * spacing_ : spacing_;
  }

  /// Grid on which the Fourier transform of a function sampled here lives:
  /// same point count, spacing 1 / (n h).
  Grid dual() const;

  /// Same point count and half-width equal to 1e-12 relative (dual of a
  /// dual reproduces the original only up to rounding).
  friend bool operator==(const Grid& a, const Grid& b);

 private:
  double half_width_;
  std::size_t n_points_;
  double spacing_;
};

/// Complex-valued function sampled on a Grid.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<complex> values);
  explicit SampledFunction(Grid grid) : SampledFunction(grid, std::vector<complex>(grid.size())) {}

  static SampledFunction from(const Grid& grid, const std::function<complex(double)>& f);
  static SampledFunction from_real(const Grid& grid, const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const complex> values() const { return values_; }
  std::span<complex> values() { return values_; }
  const complex& operator[](std::size_t j) const { return values_[j]; }
  complex& operator[](std::size_t j) { return values_[j]; }

  SampledFunction& operator+=(const SampledFunction& other);
  SampledFunction& operator-=(const SampledFunction& other);
  SampledFunction& operator*=(complex scale);

  friend SampledFunction operator+(SampledFunction a, const SampledFunction& b) { return a += b; }
  friend SampledFunction operator-(SampledFunction a, const SampledFunction& b) { return a -= b; }
  friend SampledFunction operator*(SampledFunction a, complex s) { return a *= s; }
  friend SampledFunction operator*(complex s, SampledFunction a) { return a *= s; }

  /// f(t - shift), evaluated by linear interpolation between nodes and zero
  /// outside the grid. Exact when shift is a multiple of the spacing.
  SampledFunction translated(double shift) const;
  /// f(-t).
  SampledFunction reflected() const;

 private:
  Grid grid_;
  std::vector<complex> values_;
};

void require_same_grid(const SampledFunction& f, const SampledFunction& g);

}  // namespace orthobound
