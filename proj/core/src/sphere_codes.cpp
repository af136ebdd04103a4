#include "orthobound/sphere_codes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::exact_small_dim: return "exact_small_dim";
    case BoundMethod::linear_independence: return "linear_independence";
    case BoundMethod::volume: return "volume";
    case BoundMethod::delsarte: return "delsarte";
    case BoundMethod::complexification: return "complexification";
  }
  return "unknown";
}

namespace {

void validate(const CodeBoundQuery& q) {
  if (q.dim < 1) throw DomainError("code bound: dimension must be at least 1");
  if (q.dim > kMaxDimension) throw DomainError("code bound: dimension beyond 2^62");
  if (!(q.alpha >= 0.0)) throw DomainError("code bound: alpha must be nonnegative");
  if (q.alpha >= 1.0) throw DomainError("code bound: alpha >= 1 admits codes of every size");
}

std::optional<Cardinality> exact_small(double alpha, std::int64_t d) {
  if (d == 1) return Cardinality::exact(1);
  if (d == 2) {
    // cos(pi / N) <= alpha < cos(pi / (N + 1))
    const double n = std::floor(std::numbers::pi / std::acos(alpha) + 1e-9);
    return Cardinality::floor_of(std::max(2.0, n));
  }
  return std::nullopt;
}

std::optional<Cardinality> delsarte(double alpha, std::int64_t dim) {
  const double a2 = alpha * alpha;
  const auto d = static_cast<double>(dim);
  if (!(alpha * std::sqrt(d) < 1.0)) return std::nullopt;
  return Cardinality::floor_of((1.0 - a2) * d / (1.0 - a2 * d));
}

Cardinality volume(double alpha, std::int64_t d, int h) {
  const double base = 1.0 + std::sqrt(2.0 / (1.0 - alpha));
  return Cardinality::floor_of_log10(static_cast<double>(h) * static_cast<double>(d) * std::log10(base));
}

}  // namespace

CodeBoundReport code_upper_bound(const CodeBoundQuery& q) {
  validate(q);
  CodeBoundReport r;
  r.query = q;
  const bool real = q.field == Field::real;
  auto& m = r.methods;
  m[BoundMethod::exact_small_dim] = real ? exact_small(q.alpha, q.dim) : std::nullopt;
  m[BoundMethod::linear_independence] =
      q.alpha * static_cast<double>(q.dim) < 1.0 ? std::optional(Cardinality::exact(static_cast<std::uint64_t>(q.dim))) : std::nullopt;
  m[BoundMethod::volume] = volume(q.alpha, q.dim, real ? 1 : 2);
  m[BoundMethod::delsarte] = delsarte(q.alpha, real ? q.dim : 2 * q.dim);
  m[BoundMethod::complexification] =
      real ? std::nullopt : std::optional(code_upper_bound({q.alpha, 2 * q.dim, Field::real}).best_upper);

  bool first = true;
  for (const auto& [method, value] : m) {
    if (!value) continue;
    if (first || *value < r.best_upper) {
      r.best_upper = *value;
      r.best_method = method;
      first = false;
    }
  }
  return r;
}

CodeVerification verify_code(const SphericalCode& code, double alpha) {
  for (std::size_t i = 0; i < code.vectors.size(); ++i) {
    const auto& v = code.vectors[i];
    if (v.size() != code.dim) {
      throw PreconditionError("verify_code: vector " + std::to_string(i) + " has the wrong dimension");
    }
    if (std::abs(v.norm() - 1.0) > 1e-10) {
      throw PreconditionError("verify_code: vector " + std::to_string(i) + " is not unit norm");
    }
  }
  CodeVerification out;
  for (std::size_t i = 0; i < code.vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < code.vectors.size(); ++j) {
      out.max_coherence = std::max(out.max_coherence, std::abs(code.vectors[j].dot(code.vectors[i])));
    }
  }
  out.valid = out.max_coherence <= alpha + 1e-10;
  return out;
}

namespace {

class Packer {
 public:
  Packer(int dim, Field field, double alpha) : dim_(dim), field_(field), alpha_(alpha) {}

  bool offer(const Eigen::VectorXcd& v) {
    for (const auto& u : vectors_) {
      if (std::abs(v.dot(u)) > alpha_) return false;
    }
    vectors_.push_back(v);
    return true;
  }

  void fill_random(std::mt19937_64& rng, int trials) {
    std::normal_distribution<double> gauss;
    for (int t = 0; t < trials; ++t) {
      Eigen::VectorXcd v(dim_);
      for (int i = 0; i < dim_; ++i) v(i) = {gauss(rng), field_ == Field::complex ? gauss(rng) : 0.0};
      const double n = v.norm();
      if (n < 1e-12) continue;
      offer(v / n);
    }
  }

  // Appends without checking (caller guarantees the coherence).
  void push(Eigen::VectorXcd v) { vectors_.push_back(std::move(v)); }

  SphericalCode code() const { return {dim_, field_, vectors_}; }
  std::size_t size() const { return vectors_.size(); }

 private:
  int dim_;
  Field field_;
  double alpha_;
  std::vector<Eigen::VectorXcd> vectors_;
};

Eigen::VectorXcd unit(int dim, int i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(i) = 1.0;
  return v;
}

}  // namespace

SphericalCode greedy_code(double alpha, int dim, Field field, int trials, std::uint64_t seed) {
  if (dim < 1) throw DomainError("greedy_code: dimension must be at least 1");
  if (!(alpha >= 0.0) || !(alpha < 1.0)) throw DomainError("greedy_code: alpha must lie in [0, 1)");
  if (trials < 0) throw DomainError("greedy_code: trials must be nonnegative");
  std::mt19937_64 rng(seed);

  std::vector<Packer> candidates;

  Packer frame(dim, field, alpha);
  for (int i = 0; i < dim; ++i) frame.offer(unit(dim, i));
  frame.fill_random(rng, trials);
  candidates.push_back(std::move(frame));

  Packer plain(dim, field, alpha);
  plain.fill_random(rng, trials);
  candidates.push_back(std::move(plain));

  if (dim >= 2) {
    // N lines at angles k pi / N have coherence cos(pi / N).
    const double lines_max = std::floor(std::numbers::pi / std::acos(alpha) + 1e-9);
    const int n = static_cast<int>(std::clamp(lines_max, 2.0, 100000.0));
    Packer lines(dim, field, alpha);
    for (int k = 0; k < n; ++k) {
      const double theta = std::numbers::pi * k / n;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
      v(0) = std::cos(theta);
      v(1) = std::sin(theta);
      lines.push(std::move(v));
    }
    for (int i = 2; i < dim; ++i) lines.push(unit(dim, i));
    lines.fill_random(rng, trials);
    candidates.push_back(std::move(lines));
  }

  const Packer* best = &candidates.front();
  for (const auto& p : candidates) {
    if (p.size() > best->size()) best = &p;
  }
  return best->code();
}

}  // namespace orthobound
