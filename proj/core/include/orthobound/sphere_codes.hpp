#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orthobound/cardinality.hpp"

namespace orthobound {

enum class Field { real, complex };

std::string to_string(Field f);

/// Largest dimension accepted by code_upper_bound (complex queries double it).
inline constexpr std::int64_t kMaxDimension = std::int64_t{1} << 61;

/// Maximal size of a spherical code in K^d with pairwise |<u, v>| <= alpha.
struct CodeBoundQuery {
  double alpha = 0.0;
  std::int64_t dim = 1;
  Field field = Field::real;
};

enum class BoundMethod { exact_small_dim, linear_independence, volume, delsarte, complexification };

std::string to_string(BoundMethod m);

struct CodeBoundReport {
  CodeBoundQuery query;
  Cardinality best_upper;
  BoundMethod best_method = BoundMethod::volume;
  /// Every method, with nullopt where it does not apply.
  std::map<BoundMethod, std::optional<Cardinality>> methods;
  /// Size of a constructed code, when one was searched for.
  std::optional<std::uint64_t> lower_bound;
};

/// Minimum over the applicable bounds:
///  - exact values for real d = 1 and d = 2,
///  - d when alpha < 1/d,
///  - the volume bound floor((1 + sqrt(2 / (1 - alpha)))^{h d}), h = 1 (real), 2 (complex),
///  - the Delsarte bound floor((1 - alpha^2) d / (1 - alpha^2 d)) for alpha < 1/sqrt(d),
///    in dimension 2d for complex queries,
///  - for complex queries, the full real report in dimension 2d.
/// Throws DomainError for alpha outside [0, 1) or dim < 1.
CodeBoundReport code_upper_bound(const CodeBoundQuery& q);

/// Unit vectors in K^d (real codes have zero imaginary parts).
struct SphericalCode {
  int dim = 1;
  Field field = Field::real;
  std::vector<Eigen::VectorXcd> vectors;

  std::size_t size() const { return vectors.size(); }
};

struct CodeVerification {
  bool valid = false;
  double max_coherence = 0.0;
};

/// Checks pairwise |<u, v>| <= alpha + 1e-10. Throws PreconditionError for
/// vectors that are not unit norm (to 1e-10) or have the wrong dimension.
CodeVerification verify_code(const SphericalCode& code, double alpha);

/// Randomized construction of a code with coherence <= alpha: the best of
/// greedy random packing seeded with the canonical basis, plain greedy
/// random packing, and equiangular lines in a plane completed by an
/// orthonormal frame. Deterministic for a given seed; `trials` is the
/// number of random candidates tried per strategy.
SphericalCode greedy_code(double alpha, int dim, Field field, int trials, std::uint64_t seed);

}  // namespace orthobound
