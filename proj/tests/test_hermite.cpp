#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "orthobound/corpus.hpp"
#include "orthobound/error.hpp"
#include "orthobound/fourier.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/numerics.hpp"

using namespace orthobound;
using std::numbers::pi;

TEST_CASE("recurrence agrees with explicit Hermite polynomials") {
  double worst = 0.0;
  for (int k = 0; k <= 30; ++k) {
    for (double t : {-3.1, -1.0, -0.2, 0.0, 0.05, 0.7, 1.9, 2.6}) {
      worst = std::max(worst, std::abs(hermite_function(k, t) - oracle::hermite(k, t)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("hermite_functions returns the same values as hermite_function") {
  const auto all = hermite_functions(12, 0.83);
  REQUIRE(all.size() == 12);
  for (int k = 0; k < 12; ++k) CHECK(all[static_cast<std::size_t>(k)] == doctest::Approx(hermite_function(k, 0.83)));
}

TEST_CASE("h_0 is 2^{1/4} exp(-pi t^2)") {
  for (double t : {0.0, 0.4, 1.3}) {
    CHECK(hermite_function(0, t) == doctest::Approx(std::pow(2.0, 0.25) * std::exp(-pi * t * t)).epsilon(1e-15));
  }
}

TEST_CASE("second moments from quadrature give the eigenvalues") {
  // <H h_k, h_k> splits evenly between time and frequency.
  for (int k = 0; k <= 8; ++k) {
    const double m2 = 2.0 * oracle::integrate(
                              [k](double t) {
                                const double h = oracle::hermite(k, t);
                                return t * t * h * h;
                              },
                              0.0, 12.0);
    CHECK(2.0 * m2 == doctest::Approx(hermite_eigenvalue(k)).epsilon(1e-10));
    CHECK(hermite_eigenvalue(k) == doctest::Approx((2.0 * k + 1.0) / (2.0 * pi)).epsilon(1e-15));
  }
}

TEST_CASE("sampled basis is orthonormal and diagonalizes H") {
  const HermiteBasis b = build_hermite_basis(20, Grid());
  CHECK(b.gram_residual < 1e-8);
  for (int k = 0; k <= 10; ++k) {
    const auto& h = b.functions[static_cast<std::size_t>(k)];
    CHECK(hermite_form(h) == doctest::Approx(hermite_eigenvalue(k)).epsilon(1e-9));
    CHECK(norm(apply_hermite_operator(h) - h * complex(hermite_eigenvalue(k))) < 1e-5);
    CHECK(variance(h) == doctest::Approx((2.0 * k + 1.0) / (4.0 * pi)).epsilon(1e-9));
  }
}

TEST_CASE("Hermite functions are Fourier eigenfunctions") {
  const HermiteBasis b = build_hermite_basis(11, Grid());
  for (int k = 0; k <= 10; ++k) {
    const complex phase = std::pow(complex(0.0, -1.0), k);
    for (double xi : {-1.4, -0.3, 0.0, 0.9}) {
      const complex got = fourier_at(b.functions[static_cast<std::size_t>(k)], xi);
      CHECK(std::abs(got - phase * oracle::hermite(k, xi)) < 1e-10);
    }
  }
}

TEST_CASE("a grid too coarse for the requested count is rejected") {
  CHECK_THROWS_AS(build_hermite_basis(60, Grid(4.0, 64)), NumericalError);
}

TEST_CASE("unit-norm mode rejects unnormalized input") {
  const HermiteBasis b = build_hermite_basis(1, Grid());
  const SampledFunction twice = b.functions[0] * complex(2.0);
  CHECK_THROWS_AS(hermite_form(twice), PreconditionError);
  CHECK(hermite_form(twice, FormMode::raw) == doctest::Approx(4.0 * hermite_eigenvalue(0)));
}

TEST_CASE("sharp and weak constants") {
  double running = 0.0;
  for (int n = 0; n <= 12; ++n) {
    running += (2.0 * n + 1.0) / (2.0 * pi);
    CHECK(sharp_bound(n) == doctest::Approx(running).epsilon(1e-14));
    CHECK(weak_bound(n) == doctest::Approx((n + 1.0) * (2.0 * n + 1.0) / (4.0 * pi)));
    CHECK(weak_bound(n) < sharp_bound(n));
  }
}

TEST_CASE("Hermite functions attain the sharp sums and are identified by them") {
  const HermiteBasis b = build_hermite_basis(11, Grid());
  const auto s = sharp_mean_dispersion_check(b.functions);
  CHECK(s.hermite_identified);
  CHECK(s.equality_prefix == 10);
  for (std::size_t n = 0; n < s.running_sums.size(); ++n) {
    CHECK(s.running_sums[n] == doctest::Approx(sharp_bound(static_cast<int>(n))).epsilon(1e-8));
  }
}

TEST_CASE("rotations of h_0..h_5 stay above the sharp bound and lose identification") {
  const HermiteBasis b = build_hermite_basis(6, Grid());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto fam = rotated_hermite_family(b, 6, seed);
    CHECK(orthonormality_defect(fam) < 1e-8);
    const auto s = sharp_mean_dispersion_check(fam);
    for (std::size_t n = 0; n < s.running_sums.size(); ++n) {
      CHECK(s.running_sums[n] >= sharp_bound(static_cast<int>(n)) - 1e-8);
    }
    // The full six-term sum is rotation invariant.
    CHECK(s.running_sums.back() == doctest::Approx(sharp_bound(5)).epsilon(1e-8));
    CHECK_FALSE(s.hermite_identified);
  }
}

TEST_CASE("Rayleigh-Ritz trace inequality") {
  const HermiteBasis b = build_hermite_basis(8, Grid());
  const auto fam = rotated_hermite_family(b, 5, 42);
  const TraceCheck tc = rayleigh_ritz_trace(fam);
  CHECK(tc.holds);
  CHECK(tc.lhs == doctest::Approx(25.0 / (2.0 * pi)));
  // The compression of H to span(h_0..h_4) has the first five eigenvalues.
  for (int k = 0; k < 5; ++k) {
    CHECK(tc.matrix_eigenvalues[static_cast<std::size_t>(k)] == doctest::Approx(hermite_eigenvalue(k)).epsilon(1e-8));
  }
}

TEST_CASE("Heisenberg products") {
  const HermiteBasis b = build_hermite_basis(2, Grid());
  CHECK(heisenberg_product(b.functions[0]) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-9));
  CHECK(heisenberg_product(b.functions[1]) == doctest::Approx(3.0 / (4.0 * pi)).epsilon(1e-9));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(heisenberg_product(random_localized_function(Grid(), seed)) >= 1.0 / (4.0 * pi) - 1e-8);
  }
}
