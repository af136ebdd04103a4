#include "orthobound/fourier.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace orthobound {
namespace {

// The FFTW planner is not reentrant; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;
using Buffer = std::unique_ptr<fftw_complex[], BufferDeleter>;

// e^{2 i pi x}, with x reduced modulo 1 first so that large arguments keep
// full phase accuracy.
complex turn(double x) {
  const double r = x - std::round(x);
  const double a = 2.0 * std::numbers::pi * r;
  return {std::cos(a), std::sin(a)};
}

double edge_fraction(std::span<const complex> v) {
  const std::size_t n = v.size();
  const std::size_t band = std::max<std::size_t>(1, n / 50);
  double edge = 0.0, total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::norm(v[j]);
    total += e;
    if (j < band || j >= n - band) edge += e;
  }
  return total > 0.0 ? edge / total : 0.0;
}

constexpr double kEdgeThreshold = 1e-12;

// out_k = h sum_j v_j exp(2 i pi s x_j y_k), x on `grid`, y on grid.dual().
Transformed transform(const SampledFunction& f, int sign) {
  const Grid& grid = f.grid();
  const Grid dual = grid.dual();
  const std::size_t n = grid.size();
  const double h = grid.spacing();

  Buffer buf(fftw_alloc_complex(n));
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(n), buf.get(), buf.get(),
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE));
  }

  // With x_j = -X + j h, y_k = -Y + k dy and h dy = 1/n, both h Y and X dy
  // equal (n-1)/(2n) and X Y = (n-1)^2/(4n); the phases are exact rationals.
  const auto nn = static_cast<long long>(n);
  const long long den = 2 * nn;
  auto half_phase = [&](long long j) {
    const long long num = (j * (nn - 1)) % den;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  const double s = static_cast<double>(sign);

  for (std::size_t j = 0; j < n; ++j) {
    const complex v = f[j] * turn(-s * half_phase(static_cast<long long>(j)));
    buf[j][0] = v.real();
    buf[j][1] = v.imag();
  }
  fftw_execute(plan.get());

  const long long xy_num = ((nn - 1) * (nn - 1)) % (4 * nn);
  const complex global = h * turn(s * static_cast<double>(xy_num) / static_cast<double>(4 * nn));
  std::vector<complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = global * turn(-s * half_phase(static_cast<long long>(k))) * complex(buf[k][0], buf[k][1]);
  }

  Transformed result{SampledFunction(dual, std::move(out)), false};
  result.aliasing_warning = edge_fraction(f.values()) > kEdgeThreshold ||
                            edge_fraction(result.value.values()) > kEdgeThreshold;
  return result;
}

}  // namespace

Transformed fourier_transform(const SampledFunction& f) { return transform(f, -1); }

Transformed inverse_fourier_transform(const SampledFunction& spectrum) { return transform(spectrum, +1); }

complex fourier_at(const SampledFunction& f, double xi) {
  const Grid& g = f.grid();
  complex acc{};
  for (std::size_t j = 0; j < g.size(); ++j) acc += f[j] * turn(-g.point(j) * xi);
  return g.spacing() * acc;
}

}  // namespace orthobound
