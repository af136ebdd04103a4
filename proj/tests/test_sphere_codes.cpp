#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orthobound/error.hpp"
#include "orthobound/sphere_codes.hpp"

using namespace orthobound;
using std::numbers::pi;

namespace {

std::uint64_t best(double alpha, std::int64_t d, Field f = Field::real) {
  const auto r = code_upper_bound({alpha, d, f});
  REQUIRE(r.best_upper.is_exact());
  return *r.best_upper.value();
}

double coherence(const SphericalCode& c) {
  double m = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) m = std::max(m, std::abs(c.vectors[i].dot(c.vectors[j])));
  return m;
}

}  // namespace

TEST_CASE("exact values in dimensions one and two") {
  CHECK(best(0.0, 1) == 1);
  CHECK(best(0.3, 1) == 1);
  CHECK(best(0.99, 1) == 1);
  CHECK(best(0.3, 2) == 2);
  CHECK(best(std::cos(pi / 4), 2) == 4);
  // Lines in the plane at angle >= pi/3 apart: three of them.
  CHECK(best(0.5, 2) == 3);
  CHECK(to_string(code_upper_bound({0.3, 2, Field::real}).best_method) == to_string(BoundMethod::exact_small_dim));
}

TEST_CASE("alpha below 1/d leaves only the basis") {
  CHECK(best(0.05, 10) == 10);
  CHECK(code_upper_bound({0.05, 10, Field::real}).best_method == BoundMethod::linear_independence);
  CHECK(best(0.0, 37) == 37);
}

TEST_CASE("Delsarte bound against hand arithmetic") {
  // (1 - 0.04) 10 / (1 - 0.4) = 16.
  CHECK(best(0.2, 10) == 16);
  CHECK(code_upper_bound({0.2, 10, Field::real}).best_method == BoundMethod::delsarte);
  // 0.99 * 20 / 0.8 = 24.75.
  CHECK(best(0.1, 20) == 24);
  // 0.9775 * 30 / 0.325 = 90.23...
  CHECK(best(0.15, 30) == 90);
}

TEST_CASE("volume bound") {
  // (1 + sqrt(2 / 0.5))^3 = 27.
  const auto r = code_upper_bound({0.5, 3, Field::real});
  const auto& vol = r.methods.at(BoundMethod::volume);
  REQUIRE(vol.has_value());
  CHECK(*vol->value() == 27);
  CHECK(*r.best_upper.value() <= 27);
  // Real dimension 40 at alpha = 0.9: only the volume bound applies.
  const auto big = code_upper_bound({0.9, 40, Field::real});
  CHECK(big.best_method == BoundMethod::volume);
  CHECK(big.best_upper.log10() == doctest::Approx(40.0 * std::log10(1.0 + std::sqrt(20.0))).epsilon(1e-9));
}

TEST_CASE("complex queries use the real bound in twice the dimension") {
  // Delsarte in dimension 20 at 0.2: 0.96 * 20 / 0.2 = 96.
  CHECK(best(0.2, 10, Field::complex) == 96);
  CHECK(best(0.02, 4, Field::complex) == 4);
  const auto r = code_upper_bound({0.6, 3, Field::complex});
  CHECK(r.best_upper <= *r.methods.at(BoundMethod::volume));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(code_upper_bound({1.0, 3, Field::real}), DomainError);
  CHECK_THROWS_AS(code_upper_bound({-0.1, 3, Field::real}), DomainError);
  CHECK_THROWS_AS(code_upper_bound({0.3, 0, Field::real}), DomainError);
  CHECK_THROWS(code_upper_bound({0.3, kMaxDimension + 1, Field::real}));
}

TEST_CASE("huge dimensions stay finite") {
  const auto r = code_upper_bound({1e-13, std::int64_t{1} << 40, Field::complex});
  CHECK(r.best_upper.is_exact());
  CHECK(*r.best_upper.value() == (std::uint64_t{1} << 40));
}

TEST_CASE("greedy codes are valid and below every upper bound") {
  for (double alpha : {0.1, 0.3, 0.5, 0.7}) {
    for (int d : {2, 3, 4, 6}) {
      for (Field f : {Field::real, Field::complex}) {
        const auto code = greedy_code(alpha, d, f, 300, 99);
        CAPTURE(alpha);
        CAPTURE(d);
        CHECK(code.size() >= static_cast<std::size_t>(d));
        CHECK(coherence(code) <= alpha + 1e-10);
        for (const auto& v : code.vectors) CHECK(v.norm() == doctest::Approx(1.0));
        CHECK(verify_code(code, alpha).valid);
        CHECK(Cardinality::exact(code.size()) <= code_upper_bound({alpha, d, f}).best_upper);
      }
    }
  }
}

TEST_CASE("greedy codes reach the planar optimum") {
  CHECK(greedy_code(std::cos(pi / 4) + 1e-9, 2, Field::real, 500, 3).size() == 4);
  CHECK(greedy_code(0.5 + 1e-9, 2, Field::real, 500, 3).size() == 3);
}

TEST_CASE("greedy construction is deterministic per seed") {
  const auto a = greedy_code(0.4, 5, Field::real, 200, 7);
  const auto b = greedy_code(0.4, 5, Field::real, 200, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.vectors[i] == b.vectors[i]);
}

TEST_CASE("verify_code rejects non-unit vectors") {
  SphericalCode c{2, Field::real, {Eigen::VectorXcd::Ones(2)}};
  CHECK_THROWS_AS(verify_code(c, 0.5), PreconditionError);
}
