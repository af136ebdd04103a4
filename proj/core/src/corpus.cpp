#include "orthobound/corpus.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

using std::numbers::pi;

Eigen::MatrixXcd random_unitary(int n, bool complex_entries, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_unitary: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    g.data()[i] = complex(normal(rng), complex_entries ? normal(rng) : 0.0);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  // Rescale columns by the phases of diag(R) so that Q is Haar distributed.
  for (int j = 0; j < n; ++j) {
    const complex r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
  }
  return q;
}

std::vector<SampledFunction> rotated_hermite_family(const HermiteBasis& basis, int m, std::uint64_t seed) {
  if (m < 1 || m > basis.size()) throw DomainError("rotated_hermite_family: m outside [1, basis size]");
  const Eigen::MatrixXcd Q = random_unitary(m, true, seed);
  std::span<const SampledFunction> ref(basis.functions.data(), static_cast<std::size_t>(m));
  std::vector<SampledFunction> out;
  for (int k = 0; k < m; ++k) {
    std::vector<complex> c(Q.col(k).data(), Q.col(k).data() + m);
    out.push_back(synthesize(c, ref));
  }
  return out;
}

SampledFunction random_localized_function(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> dilation(0.7, 1.4);
  std::uniform_real_distribution<double> offset(-0.3, 0.3);
  constexpr int kTerms = 5;
  std::vector<complex> c(kTerms);
  for (auto& x : c) x = complex(normal(rng), normal(rng));
  const double s = dilation(rng);
  const double a = offset(rng);
  const double b = offset(rng);
  const SampledFunction f = SampledFunction::from(grid, [&](double t) {
    const auto h = hermite_functions(kTerms, s * (t - a));
    complex v = 0.0;
    for (int k = 0; k < kTerms; ++k) v += c[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(k)];
    return std::sqrt(s) * v * std::polar(1.0, 2.0 * pi * b * t);
  });
  return normalized(f);
}

EnvelopeFamily hermite_envelope_family(const std::string& kind, int m, const Grid& grid) {
  if (m < 1) throw DomainError("hermite_envelope_family: m must be positive");
  const HermiteBasis basis = build_hermite_basis(m, grid);
  if (kind == "tabulated") {
    // Node j carries the largest |h_k| over both adjacent cells, so the
    // linear interpolant dominates between nodes as well, not only on them.
    constexpr int kSub = 16;
    const double h = grid.spacing();
    SampledFunction top(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double t = grid.point(j);
      double peak = 0.0;
      for (int i = -kSub; i <= kSub; ++i) {
        for (double v : hermite_functions(m, t + h * i / kSub)) peak = std::max(peak, std::abs(v));
      }
      top[j] = 1.02 * peak;
    }
    return {kind, basis.functions, Envelope::tabulated(std::move(top))};
  }

  const bool power = kind == "power";
  if (!power && kind != "gauss") throw DomainError("unknown envelope kind '" + kind + "'");
  constexpr double p = 2.0;
  constexpr double a = 0.5;
  auto profile = [&](double x) { return power ? std::pow(1.0 + std::abs(x), -p) : std::exp(-pi * a * x * x); };
  double ratio = 0.0;
  constexpr int kSamples = 40001;
  const double span = grid.half_width();
  for (int i = 0; i < kSamples; ++i) {
    const double x = -span + 2.0 * span * i / (kSamples - 1);
    const auto h = hermite_functions(m, x);
    for (double v : h) ratio = std::max(ratio, std::abs(v) / profile(x));
  }
  const double C = 1.02 * ratio;
  return {kind, basis.functions, power ? Envelope::power_law(p, C) : Envelope::gaussian(a, C)};
}

}  // namespace orthobound
