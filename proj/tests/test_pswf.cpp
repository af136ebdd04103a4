#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "orthobound/corpus.hpp"
#include "orthobound/error.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/numerics.hpp"
#include "orthobound/pswf.hpp"

using namespace orthobound;
using std::numbers::pi;

TEST_CASE("concentration eigenvalues match a Nystrom discretization of the sinc kernel") {
  struct Case {
    double T, Omega;
  };
  for (const Case c : {Case{1.0, 1.0}, Case{0.5, 2.0}, Case{2.0, 2.0}, Case{0.3, 0.4}}) {
    const auto want = oracle::sinc_eigenvalues(c.T, c.Omega);
    const int count = static_cast<int>(std::floor(4.0 * c.T * c.Omega)) + 6;
    const auto got = prolate_eigenvalues(c.T, c.Omega, count);
    for (int n = 0; n < count; ++n) {
      CAPTURE(c.T);
      CAPTURE(n);
      CHECK(std::abs(got[static_cast<std::size_t>(n)] - want[static_cast<std::size_t>(n)]) < 1e-10);
    }
  }
}

TEST_CASE("eigenvalue sum is the time-bandwidth product") {
  for (double T : {0.5, 1.0, 1.5}) {
    const auto l = prolate_eigenvalues(T, 1.0, 60);
    double sum = 0.0;
    for (std::size_t n = 0; n < l.size(); ++n) {
      sum += l[n];
      if (n > 0) CHECK(l[n] <= l[n - 1]);
      CHECK(l[n] >= 0.0);
      CHECK(l[n] <= 1.0);
    }
    CHECK(sum == doctest::Approx(4.0 * T).epsilon(1e-10));
  }
}

TEST_CASE("Landau-Pollak dimension") {
  CHECK(landau_pollak_dimension(1.0, 1.0) == 5);
  CHECK(landau_pollak_dimension(2.0, 2.0) == 17);
  CHECK(landau_pollak_dimension(0.5, 0.7) == 2);
  CHECK(landau_pollak_dimension(0.1, 0.1) == 1);
}

TEST_CASE("basis requests below floor(4 T Omega) + 2 are refused") {
  CHECK_THROWS(build_pswf_basis(1.0, 1.0, 5));
  CHECK_NOTHROW(build_pswf_basis(1.0, 1.0, 6));
}

TEST_CASE("requests reaching the plunge region are refused") {
  CHECK_THROWS_AS(build_pswf_basis(1.0, 1.0, 40), NumericalError);
}

TEST_CASE("PSWFs solve the sinc integral equation") {
  const PswfBasis b = build_pswf_basis(1.0, 1.0, 8);
  for (int n = 0; n < 8; ++n) {
    for (double t : {-1.7, -0.4, 0.0, 0.6, 1.0, 2.3}) {
      const double lhs = oracle::integrate(
          [&](double s) {
            const double d = t - s;
            const double k = std::abs(d) < 1e-12 ? 2.0 : std::sin(2.0 * pi * d) / (pi * d);
            return k * b.value(n, s);
          },
          -1.0, 1.0);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(lhs == doctest::Approx(b.lambdas[static_cast<std::size_t>(n)] * b.value(n, t)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("double orthogonality") {
  const PswfBasis b = build_pswf_basis(1.0, 1.0, 8);
  const Eigen::MatrixXd G = b.l2_gram(8);
  CHECK((G - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double inner = oracle::integrate([&](double t) { return b.value(i, t) * b.value(j, t); }, -1.0, 1.0);
      const double expect = i == j ? b.lambdas[static_cast<std::size_t>(i)] : 0.0;
      CHECK(std::abs(inner - expect) < 1e-9);
    }
  }
}

TEST_CASE("spectra are supported in the band") {
  const PswfBasis b = build_pswf_basis(1.0, 1.0, 6);
  CHECK(b.fourier_value(0, 1.01) == complex(0.0));
  CHECK(std::abs(b.fourier_value(0, 0.0)) > 0.1);
  CHECK(b.bandwidth() == doctest::Approx(2.0 * pi));
}

TEST_CASE("sampled functions agree with point evaluation") {
  const PswfBasis b = build_pswf_basis(1.5, 1.0, 9);
  const auto& f = b.functions[3];
  for (std::size_t j = 0; j < f.size(); j += 257) {
    CHECK(std::abs(f[j] - complex(b.value(3, f.grid().point(j)))) < 1e-12);
  }
}

TEST_CASE("Landau-Pollak on Gaussians") {
  const HermiteBasis h = build_hermite_basis(3, Grid());
  const PswfBasis b = build_pswf_basis(1.5, 1.5, 12);
  for (const auto& f : h.functions) {
    const double eps = in_P_class(f, 1.5, 1.5);
    const auto rep = landau_pollak_check(f, 1.5, 1.5, eps, b);
    CHECK(rep.d == 10);
    CHECK(rep.residual <= 7.0 * eps);
    CHECK(rep.member_of_S);
  }
}

TEST_CASE("landau_pollak_check refuses functions outside the class") {
  const HermiteBasis h = build_hermite_basis(1, Grid());
  const PswfBasis b = build_pswf_basis(1.0, 1.0, 8);
  const double eps = in_P_class(h.functions[0], 1.0, 1.0);
  CHECK_THROWS_AS(landau_pollak_check(h.functions[0], 1.0, 1.0, 0.5 * eps, b), PreconditionError);
}

TEST_CASE("in_P_class for h_0 is the Gaussian tail") {
  const HermiteBasis h = build_hermite_basis(1, Grid());
  const double T = 0.6;
  CHECK(in_P_class(h.functions[0], T, T) ==
        doctest::Approx(std::sqrt(std::erfc(std::sqrt(2.0 * pi) * T))).epsilon(1e-8));
}

TEST_CASE("projection residual is the Pythagorean defect of the coefficients") {
  const PswfBasis b = build_pswf_basis(1.5, 1.5, 14);
  const SampledFunction f = random_localized_function(Grid(), 17);
  double prev = INFINITY;
  for (int d = 1; d <= 14; ++d) {
    double kept = 0.0;
    for (const complex c : pswf_coefficients(f, b, d)) kept += std::norm(c);
    const double r = projection_residual(f, b, d);
    CHECK(r == doctest::Approx(std::sqrt(std::max(0.0, squared_norm(f) - kept))).epsilon(1e-12));
    CHECK(r <= prev);
    prev = r;
  }
}
