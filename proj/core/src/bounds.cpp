#include "orthobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "orthobound/error.hpp"

namespace orthobound {

using std::numbers::pi;

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Strictly above x, as the theorems need T > max C_f.
double strictly_above(double x) {
  return std::nextafter(x * (1.0 + 1e-12), std::numeric_limits<double>::infinity());
}

std::int64_t dimension_from_T(double T) {
  const double x = 4.0 * T * T;
  if (!(x < static_cast<double>(kMaxDimension))) {
    throw NumericalError("d = floor(4 T^2) + 1 is out of range for T = " + fmt(T));
  }
  return static_cast<std::int64_t>(std::floor(x)) + 1;
}

void add(std::vector<NamedValue>& v, std::string name, double x) { v.push_back({std::move(name), x}); }

void check(BoundReport& r, std::string name, bool holds, std::string detail) {
  r.assertions.push_back({std::move(name), holds, std::move(detail)});
}

void attach_code(BoundReport& r, CodeBoundReport code) {
  r.N = code.best_upper;
  r.tight_method = to_string(code.best_method);
  r.code_bound = std::move(code);
}

// Runs the generic pipeline and files it under `related`; pipelines whose
// dimension overflows are noted in the trace instead.
const BoundReport* add_generic(BoundReport& r, const Envelope& env, double eps, const std::string& label) {
  try {
    BoundReport g = umbrella_bound(env, env, eps);
    g.pipeline = label;
    r.related.push_back(std::move(g));
    return &r.related.back();
  } catch (const NumericalError& e) {
    r.trace.push_back(label + " skipped: " + e.what());
    return nullptr;
  }
}

}  // namespace

double BoundReport::get(std::string_view name) const {
  for (const auto* list : {&inputs, &intermediates}) {
    for (const auto& nv : *list) {
      if (nv.name == name) return nv.value;
    }
  }
  throw std::out_of_range("BoundReport: no value named '" + std::string(name) + "'");
}

bool BoundReport::has(std::string_view name) const {
  for (const auto* list : {&inputs, &intermediates}) {
    for (const auto& nv : *list) {
      if (nv.name == name) return true;
    }
  }
  return false;
}

bool BoundReport::all_assertions_hold() const {
  return std::ranges::all_of(assertions, [](const CheckedAssertion& a) { return a.holds; }) &&
         std::ranges::all_of(related, [](const BoundReport& r) { return r.all_assertions_hold(); });
}

MeanDispersionCount mean_dispersion_max_count(double A) {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("mean-dispersion count needs A > 0");
  MeanDispersionCount c;
  c.A = A;
  c.headline = 8.0 * pi * A * A;
  c.heisenberg_infeasible = c.headline < 1.0;
  c.n_max = static_cast<long long>(std::floor((16.0 * pi * A * A - 1.0) / 2.0));
  c.n_max_sharp = static_cast<long long>(std::floor(c.headline)) - 1;
  return c;
}

double minimax_lower(int n) {
  if (n < 0) throw DomainError("minimax_lower: n must be nonnegative");
  return std::sqrt((2.0 * n + 1.0) / (16.0 * pi));
}

double minimax_lower_sharp(int n) {
  if (n < 0) throw DomainError("minimax_lower_sharp: n must be nonnegative");
  return std::sqrt((n + 1.0) / (8.0 * pi));
}

BoundReport umbrella_bound(const Envelope& phi, const Envelope& psi, std::optional<double> eps) {
  const double nphi = phi.l2_norm();
  const double npsi = psi.l2_norm();
  const double M = std::min(nphi, npsi);
  if (M < 1.0 - 1e-9) {
    throw PreconditionError("umbrella: M = min(||phi||, ||psi||) = " + fmt(M) + " < 1");
  }
  const double eps_max = 1.0 / (50.0 * M);
  const double e = eps.value_or(eps_max);
  if (!(e > 0.0)) throw DomainError("umbrella: eps must be positive");
  if (e > eps_max * (1.0 + 1e-12)) {
    throw DomainError("umbrella: eps = " + fmt(e) + " exceeds 1/(50M) = " + fmt(eps_max));
  }

  BoundReport r;
  r.pipeline = "umbrella";
  r.envelopes = {phi.describe(), psi.describe()};
  add(r.inputs, "eps", e);
  add(r.intermediates, "norm_phi", nphi);
  add(r.intermediates, "norm_psi", npsi);
  add(r.intermediates, "M", M);

  const double c_phi = c_f_epsilon(phi, e).T;
  const double c_psi = c_f_epsilon(psi, e).T;
  const double T = strictly_above(std::max(c_phi, c_psi));
  const std::int64_t d = dimension_from_T(T);
  const double alpha = 50.0 * e * e * M * M;
  add(r.intermediates, "C_phi", c_phi);
  add(r.intermediates, "C_psi", c_psi);
  add(r.intermediates, "T", T);
  add(r.intermediates, "d", static_cast<double>(d));
  add(r.intermediates, "alpha", alpha);
  r.trace.push_back("M = min(||phi||, ||psi||) = " + fmt(M));
  r.trace.push_back("C_phi(eps) = " + fmt(c_phi) + ", C_psi(eps) = " + fmt(c_psi) + ", T = " + fmt(T));
  r.trace.push_back("d = floor(4 T^2) + 1 = " + std::to_string(d) + ", alpha = 50 eps^2 M^2 = " + fmt(alpha));

  check(r, "M >= 1", M >= 1.0 - 1e-9, fmt(M));
  check(r, "eps <= 1/(50M)", e <= eps_max * (1.0 + 1e-12), fmt(e) + " vs " + fmt(eps_max));
  const double tp = phi.tail(2.0, T);
  const double ts = psi.tail(2.0, T);
  check(r, "tail(phi, T) <= eps^2 ||phi||^2", tp <= e * e * nphi * nphi * (1.0 + 1e-9), fmt(tp));
  check(r, "tail(psi, T) <= eps^2 ||psi||^2", ts <= e * e * npsi * npsi * (1.0 + 1e-9), fmt(ts));
  check(r, "tail(phi, T) <= eps^2 M^2", tp <= e * e * M * M * (1.0 + 1e-9), fmt(tp) + " vs " + fmt(e * e * M * M));
  check(r, "tail(psi, T) <= eps^2 M^2", ts <= e * e * M * M * (1.0 + 1e-9), fmt(ts) + " vs " + fmt(e * e * M * M));
  check(r, "T > max(C_phi, C_psi)", T > std::max(c_phi, c_psi), fmt(T));

  attach_code(r, code_upper_bound({alpha, d, Field::complex}));
  r.trace.push_back("N <= " + r.N.to_string() + " (" + r.tight_method + ")");
  return r;
}

double power_law_case3_epsilon(double p, double C) {
  if (!(p > 1.5)) throw DomainError("case-3 eps needs p > 3/2");
  const double M = C * std::sqrt(2.0 / (2.0 * p - 1.0));
  const double crossover = std::pow((2.0 * p - 1.0) / (400.0 * C * C), (2.0 * p - 1.0) / (2.0 * (2.0 * p - 3.0)));
  return std::min(1.0 / (50.0 * M), crossover) * (1.0 - 1e-9);
}

BoundReport power_law_bound(double p, double C) {
  const Envelope env = Envelope::power_law(p, C);
  const double M = env.l2_norm();
  if (M < 1.0 - 1e-9) {
    throw DomainError("power-law bound needs C >= sqrt((2p - 1)/2) = " + fmt(std::sqrt((2.0 * p - 1.0) / 2.0)));
  }
  const double q = 2.0 * p - 1.0;

  BoundReport r;
  r.pipeline = "power-law";
  r.envelopes = {env.describe(), env.describe()};
  add(r.inputs, "p", p);
  add(r.inputs, "C", C);
  add(r.intermediates, "M", M);

  const double log10_case1 = std::pow(200.0 * std::sqrt(2.0) * C / std::sqrt(q), 4.0 / q) * std::log10(9.0);
  add(r.intermediates, "log10_N_general", log10_case1);

  const BoundReport* generic = nullptr;
  if (p > 1.5) {
    const double value = 4.0 * std::pow(500.0 * C * C / q, 2.0 / (2.0 * p - 3.0));
    r.closed_form = value;
    r.N = Cardinality::floor_of(value);
    r.tight_method = "closed form, p > 3/2";
    const double eps1 = std::pow(std::sqrt(q) / (50.0 * C * std::sqrt(2.0)), q / (2.0 * p - 3.0));
    const double eps_star = power_law_case3_epsilon(p, C);
    add(r.intermediates, "eps_1", eps1);
    add(r.intermediates, "eps_star", eps_star);
    add_generic(r, env, eps1, "umbrella at eps_1");
    // The stated eps_1 leaves alpha above 1/delta; eps_star is where the
    // generic pipeline actually falls into the alpha < 1/d regime.
    r.trace.push_back("eps_1 = " + fmt(eps1) + " (informational), eps_star = " + fmt(eps_star));
    generic = add_generic(r, env, eps_star, "umbrella at eps_star");
  } else if (p > 1.0) {
    const double value = 16.0 * std::pow(400.0 * C * C / q, 1.0 / (p - 1.0));
    r.closed_form = value;
    r.N = Cardinality::floor_of(value);
    r.tight_method = "closed form, 1 < p <= 3/2";
    const double eps0 = std::pow(std::sqrt(q) / (20.0 * C), q / (2.0 * (p - 1.0)));
    add(r.intermediates, "eps_0", eps0);
    generic = add_generic(r, env, eps0, "umbrella at eps_0");
  } else {
    r.closed_form_log10 = log10_case1;
    r.N = Cardinality::floor_of_log10(log10_case1);
    r.tight_method = "closed form, p > 1/2";
    generic = add_generic(r, env, 1.0 / (50.0 * M), "umbrella at 1/(50M)");
  }
  r.trace.push_back("closed form: N <= " + r.N.to_string());
  if (generic) {
    check(r, "generic pipeline <= closed form", !(r.N < generic->N),
          generic->N.to_string() + " vs " + r.N.to_string());
  }
  return r;
}

BoundReport gaussian_bound(double a, double C) {
  if (!(a > 0.0) || !(a <= 1.0)) throw DomainError("gaussian bound needs 0 < a <= 1");
  const double c_min = std::pow(2.0 * a, 0.25);
  if (!(C >= c_min * (1.0 - 1e-12))) throw DomainError("gaussian bound needs C >= (2a)^{1/4} = " + fmt(c_min));
  const Envelope env = Envelope::gaussian(a, C);

  BoundReport r;
  r.pipeline = "gaussian";
  r.envelopes = {env.describe(), env.describe()};
  add(r.inputs, "a", a);
  add(r.inputs, "C", C);
  add(r.intermediates, "M", env.l2_norm());

  const double l1 = std::log(50.0 * C * std::sqrt(pi) * std::exp(pi) / std::pow(a, 0.25));
  const double l2 =
      std::log(50.0 * pi * C * C * std::exp(pi * a / 2.0) / (std::pow(a, 2.5) * std::exp(2.0 * pi)));
  const double T1_sq = 2.0 / (a * pi) * l1;
  const double T2_sq = 1.0 / (a * pi) * l2;
  add(r.intermediates, "T1_sq", T1_sq);
  add(r.intermediates, "T2_sq", T2_sq);
  const double value = 2.0 + 8.0 / (a * pi) * std::max(2.0 * l1, l2);
  r.closed_form = value;
  r.N = Cardinality::floor_of(value);
  r.tight_method = "closed form";
  r.trace.push_back("T^2 thresholds " + fmt(T1_sq) + ", " + fmt(T2_sq) + "; N <= " + fmt(value));

  if (const BoundReport* g = add_generic(r, env, 1.0 / (50.0 * env.l2_norm()), "umbrella at 1/(50M)")) {
    check(r, "generic pipeline <= closed form", !(r.N < g->N), g->N.to_string() + " vs " + r.N.to_string());
  }
  return r;
}

BoundReport p_mean_dispersion_bound(double A, double p, double eps) {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("p-mean-dispersion bound needs A > 0");
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p-mean-dispersion bound needs finite p > 1");
  const double eps_max = 1.0 / (7.0 * std::sqrt(2.0));
  if (!(eps > 0.0) || !(eps < eps_max)) {
    throw DomainError("p-mean-dispersion bound needs 0 < eps < 1/(7 sqrt 2) = " + fmt(eps_max));
  }
  BoundReport r;
  r.pipeline = "p-mean-dispersion";
  add(r.inputs, "A", A);
  add(r.inputs, "p", p);
  add(r.inputs, "eps", eps);
  const double T = A + std::pow(A / eps, 2.0 / p);
  const std::int64_t d = dimension_from_T(T);
  const double alpha = 49.0 * eps * eps / (1.0 - 49.0 * eps * eps);
  add(r.intermediates, "T", T);
  add(r.intermediates, "d", static_cast<double>(d));
  add(r.intermediates, "alpha", alpha);
  r.trace.push_back("T = A + (A/eps)^{2/p} = " + fmt(T) + ", d = " + std::to_string(d) + ", alpha = " + fmt(alpha));
  attach_code(r, code_upper_bound({alpha, d, Field::complex}));
  r.trace.push_back("N <= " + r.N.to_string() + " (" + r.tight_method + ")");
  return r;
}

BoundReport p_mean_dispersion_optimized(double A) {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("p-mean-dispersion bound needs A > 0");
  const double root = std::sqrt(1.0 + 1.0 / (50.0 * A));
  const double eps = (root - 1.0) / 2.0;
  BoundReport r = p_mean_dispersion_bound(A, 2.0, eps);
  r.pipeline = "p-mean-dispersion (optimized eps, p = 2)";

  const double inv = 1.0 + 1.0 / eps;
  const double d_lower = 4.0 * A * A * inv * inv;
  const double d_upper = 5.0 * A * A * inv * inv;
  const double closed = 20.0 * A * A * std::pow(1.0 + 100.0 * A * (root + 1.0), 2.0);
  add(r.intermediates, "d_lower", d_lower);
  add(r.intermediates, "d_upper", d_upper);
  add(r.intermediates, "closed_form_bound", closed);

  const double d = r.get("d");
  const double alpha = r.get("alpha");
  check(r, "4 A^2 (1 + 1/eps)^2 <= d", d_lower <= d, fmt(d_lower) + " vs " + fmt(d));
  check(r, "d <= 5 A^2 (1 + 1/eps)^2", d <= d_upper, fmt(d) + " vs " + fmt(d_upper));
  check(r, "alpha < 1/sqrt(2d)", alpha * std::sqrt(2.0 * d) < 1.0, fmt(alpha));
  check(r, "N <= 4d", !(Cardinality::floor_of(4.0 * d) < r.N), r.N.to_string());
  check(r, "N <= 20 A^2 (1 + 100 A (sqrt(1 + 1/(50A)) + 1))^2", !(Cardinality::floor_of(closed) < r.N),
        fmt(closed));
  return r;
}

BoundReport holder_envelope_bound(double p, double phat, double C, const Envelope& phi, const Envelope& psi,
                                  double eps) {
  for (double s : {p, phat}) {
    if (!(s >= 1.0)) throw DomainError("Hoelder exponents must be at least 1");
    if (!std::isfinite(s)) throw DomainError("Hoelder exponent infinity is not supported");
  }
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("Hoelder bound needs C > 0");
  if (!(eps > 0.0) || !(49.0 * eps < 0.5)) throw DomainError("Hoelder bound needs 0 < eps < 1/98");

  BoundReport r;
  r.pipeline = "hoelder-envelope";
  r.envelopes = {phi.describe(), psi.describe()};
  add(r.inputs, "p", p);
  add(r.inputs, "phat", phat);
  add(r.inputs, "C", C);
  add(r.inputs, "eps", eps);

  const double level_phi = std::pow(eps / (C * C), p);
  const double level_psi = std::pow(eps / (C * C), phat);
  const double t_phi = phi.tail_crossing(2.0 * p, level_phi);
  const double t_psi = psi.tail_crossing(2.0 * phat, level_psi);
  const double T = strictly_above(std::max(t_phi, t_psi));
  const std::int64_t d = dimension_from_T(T);
  const double alpha = 49.0 * eps / (1.0 - 49.0 * eps);
  add(r.intermediates, "level_phi", level_phi);
  add(r.intermediates, "level_psi", level_psi);
  add(r.intermediates, "T_phi", t_phi);
  add(r.intermediates, "T_psi", t_psi);
  add(r.intermediates, "T", T);
  add(r.intermediates, "d", static_cast<double>(d));
  add(r.intermediates, "alpha", alpha);
  r.trace.push_back("int_{|t|>T} |phi|^{2p} <= (eps/C^2)^p at T = " + fmt(t_phi) + ", mirror at " + fmt(t_psi));

  // Hoelder: int_{|t|>T} |e_k|^2 <= C^2 (int |phi|^{2p})^{1/p} <= eps.
  const double e_phi = C * C * std::pow(phi.tail(2.0 * p, T), 1.0 / p);
  const double e_psi = C * C * std::pow(psi.tail(2.0 * phat, T), 1.0 / phat);
  check(r, "time tail energy <= eps", e_phi <= eps * (1.0 + 1e-9), fmt(e_phi));
  check(r, "frequency tail energy <= eps", e_psi <= eps * (1.0 + 1e-9), fmt(e_psi));

  attach_code(r, code_upper_bound({alpha, d, Field::complex}));
  r.trace.push_back("d = " + std::to_string(d) + ", alpha = " + fmt(alpha) + ", N <= " + r.N.to_string());
  return r;
}

}  // namespace orthobound
