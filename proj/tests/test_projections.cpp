#include <cmath>

#include "doctest.h"
#include "orthobound/corpus.hpp"
#include "orthobound/error.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/projections.hpp"
#include "orthobound/pswf.hpp"

using namespace orthobound;

TEST_CASE("Helmert basis spans the complement of the ones vector") {
  for (int n : {2, 5, 16}) {
    const Eigen::MatrixXd H = helmert_basis(n);
    CHECK(H.rows() == n);
    CHECK(H.cols() == n - 1);
    CHECK((H.transpose() * H - Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((H.transpose() * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("canonical basis example") {
  for (int n : {4, 9, 16, 25}) {
    const auto ex = canonical_basis_example(n);
    for (double r : ex.residuals) CHECK(std::abs(r - 1.0 / std::sqrt(n)) < 1e-15);
    // e_k - (1/n) 1 has squared norm 1 - 1/n and pairwise products -1/n,
    // so the normalized code is a simplex with coherence 1/(n - 1), which
    // is exactly eps^2 / (1 - eps^2) at eps^2 = 1/n.
    CHECK(ex.coherence == doctest::Approx(1.0 / (n - 1.0)).epsilon(1e-13));
    CHECK(ex.alpha_bound == doctest::Approx(1.0 / (n - 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("matrix construction obeys the coherence bound") {
  const int n = 12, k = 7, m = 5;
  const Eigen::MatrixXcd Q = random_unitary(n, true, 11);
  const Eigen::MatrixXcd basis = Q.leftCols(k);
  // Orthonormal family tilted slightly out of the subspace.
  const Eigen::MatrixXcd A = Q.leftCols(k) * random_unitary(k, true, 13).leftCols(m) +
                             0.05 * Q.rightCols(n - k) * random_unitary(n - k, true, 14).leftCols(m);
  const Eigen::MatrixXcd F = A.householderQr().householderQ() * Eigen::MatrixXcd::Identity(n, m);
  double eps = 0.0;
  for (int j = 0; j < m; ++j) {
    const Eigen::VectorXcd c = basis.adjoint() * F.col(j);
    eps = std::max(eps, std::sqrt(std::max(0.0, 1.0 - c.squaredNorm())));
  }
  REQUIRE(eps < 0.2);
  const auto code = onb_to_code(F, basis, eps * (1.0 + 1e-12));
  CHECK(code.coherence <= code.alpha_bound + 1e-12);
  CHECK(code.code.size() == static_cast<std::size_t>(m));
}

TEST_CASE("Hermite functions projected on PSWFs") {
  const Grid grid;
  const HermiteBasis h = build_hermite_basis(3, grid);
  const PswfBasis p = build_pswf_basis(2.0, 2.0, 20, grid);
  const int d = landau_pollak_dimension(2.0, 2.0);
  double eps_p = 0.0;
  for (const auto& f : h.functions) eps_p = std::max(eps_p, in_P_class(f, 2.0, 2.0));
  const double eps = 7.0 * eps_p;
  const auto code = onb_to_code(h.functions, p, d, eps, 0.0);
  CHECK(code.coherence <= eps * eps / (1.0 - eps * eps) + 1e-8);
  for (double r : code.residuals) CHECK(r <= eps);
}

TEST_CASE("the construction names the offending element") {
  const Grid grid;
  const HermiteBasis h = build_hermite_basis(6, grid);
  // h_5 is far from span(h_0..h_2).
  try {
    onb_to_code(h.functions, h, 3, 0.1);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
}

TEST_CASE("eta is estimated from the Gram matrix when absent") {
  const Grid grid;
  const HermiteBasis h = build_hermite_basis(6, grid);
  const std::vector<SampledFunction> fam(h.functions.begin(), h.functions.begin() + 3);
  const auto code = onb_to_code(fam, h, 4, 1e-6);
  CHECK(code.eta_estimated);
  CHECK(code.eta < 1e-4);
  CHECK(code.coherence < 1e-8);
}

TEST_CASE("approximable family bound") {
  // alpha = 0.01 / 0.99 < 1/5.
  const auto r = approximable_family_bound(0.1, 5, Field::real);
  CHECK(*r.best_upper.value() == 5);
  CHECK(r.query.alpha == doctest::Approx(0.01 / 0.99));
  CHECK_THROWS_AS(approximable_family_bound(0.75, 5, Field::real), DomainError);
}
