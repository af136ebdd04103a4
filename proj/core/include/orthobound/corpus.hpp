#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orthobound/envelope.hpp"
#include "orthobound/grid.hpp"
#include "orthobound/hermite.hpp"

namespace orthobound {

/// Haar-distributed unitary (complex) or orthogonal (real) n x n matrix.
Eigen::MatrixXcd random_unitary(int n, bool complex_entries, std::uint64_t seed);

/// sum_j Q(j, k) h_j for a random unitary Q: orthonormal, spanning the same
/// space as h_0..h_{m-1}.
std::vector<SampledFunction> rotated_hermite_family(const HermiteBasis& basis, int m, std::uint64_t seed);

/// Unit-norm test function: a random combination of h_0..h_4, dilated by a
/// factor in [0.7, 1.4], shifted by at most 0.3 and modulated by at most 0.3.
SampledFunction random_localized_function(const Grid& grid, std::uint64_t seed);

/// h_0..h_{m-1} together with an envelope of the requested kind that
/// dominates every |h_k| (and so every |h_k^| = |h_k|):
///   "power"    C (1 + |x|)^{-p} with p = 2,
///   "gauss"    C exp(-pi a x^2) with a = 1/2,
///   "tabulated" 1.02 max_k |h_k| over the two cells around each node.
/// C is the largest ratio |h_k| / profile over a fine evaluation grid,
/// enlarged by 2% to cover the gaps between evaluation points.
struct EnvelopeFamily {
  std::string kind;
  std::vector<SampledFunction> family;
  Envelope envelope;
};

EnvelopeFamily hermite_envelope_family(const std::string& kind, int m, const Grid& grid);

}  // namespace orthobound
