#include "orthobound/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthobound/error.hpp"

namespace orthobound {

Grid::Grid(double half_width, std::size_t n_points)
    : half_width_(half_width), n_points_(n_points), spacing_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("Grid: half-width must be positive and finite");
  }
  if (n_points < kMinPoints) {
    throw DomainError("Grid: at least " + std::to_string(kMinPoints) + " points required");
  }
  spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> t(n_points_);
  for (std::size_t j = 0; j < n_points_; ++j) t[j] = point(j);
  return t;
}

Grid Grid::dual() const {
  const double n = static_cast<double>(n_points_);
  const double dxi = 1.0 / (n * spacing_);
  return Grid(0.5 * (n - 1.0) * dxi, n_points_);
}

bool operator==(const Grid& a, const Grid& b) {
  if (a.n_points_ != b.n_points_) return false;
  const double scale = std::max(std::abs(a.half_width_), std::abs(b.half_width_));
  return std::abs(a.half_width_ - b.half_width_) <= 1e-12 * scale;
}

SampledFunction::SampledFunction(Grid grid, std::vector<complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw PreconditionError("SampledFunction: " + std::to_string(values_.size()) +
                            " values for a grid of " + std::to_string(grid_.size()) + " points");
  }
}

SampledFunction SampledFunction::from(const Grid& grid, const std::function<complex(double)>& f) {
  std::vector<complex> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.point(j));
  return SampledFunction(grid, std::move(v));
}

SampledFunction SampledFunction::from_real(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<complex> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.point(j));
  return SampledFunction(grid, std::move(v));
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

SampledFunction& SampledFunction::operator*=(complex scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

SampledFunction SampledFunction::translated(double shift) const {
  const double h = grid_.spacing();
  const auto n = static_cast<long long>(values_.size());
  std::vector<complex> out(values_.size());
  for (long long j = 0; j < n; ++j) {
    // index of t_j - shift
    const double x = static_cast<double>(j) - shift / h;
    const double fl = std::floor(x);
    const auto i0 = static_cast<long long>(fl);
    const double frac = x - fl;
    auto at = [&](long long i) { return (i >= 0 && i < n) ? values_[static_cast<std::size_t>(i)] : complex{}; };
    out[static_cast<std::size_t>(j)] = frac == 0.0 ? at(i0) : (1.0 - frac) * at(i0) + frac * at(i0 + 1);
  }
  return SampledFunction(grid_, std::move(out));
}

SampledFunction SampledFunction::reflected() const {
  std::vector<complex> out(values_.rbegin(), values_.rend());
  return SampledFunction(grid_, std::move(out));
}

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid())) {
    throw PreconditionError("functions are sampled on different grids");
  }
}

}  // namespace orthobound
