#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "cli.hpp"
#include "orthobound/bounds.hpp"
#include "orthobound/corpus.hpp"
#include "orthobound/fourier.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/numerics.hpp"
#include "orthobound/projections.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/riesz.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound::cli {

using std::numbers::pi;

namespace {

constexpr double kCos45 = 0.70710678118654752;

std::vector<SampledFunction> first(const std::vector<SampledFunction>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

void hermite_suite(const Context& ctx, Output& out) {
  const std::string S = "hermite";
  const Grid grid = ctx.grid();
  const HermiteBasis basis = build_hermite_basis(20, grid);
  out.check(S, "Gram of h_0..h_19 is the identity to 1e-8", basis.gram_residual < 1e-8, num(basis.gram_residual, 3));

  double eig = 0.0, fourier = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const SampledFunction& h = basis.functions[static_cast<std::size_t>(k)];
    SampledFunction r = apply_hermite_operator(h) - h * complex(hermite_eigenvalue(k));
    eig = std::max(eig, norm(r));
    const SampledFunction hh = fourier_transform(h).value;
    const complex phase = std::pow(complex(0.0, -1.0), k);
    const SampledFunction expected =
        SampledFunction::from(hh.grid(), [&](double xi) { return phase * hermite_function(k, xi); });
    fourier = std::max(fourier, norm(hh - expected));
  }
  out.check(S, "||H h_k - (2k+1)/(2pi) h_k|| < 1e-5 for k <= 10", eig < 1e-5, num(eig, 3));
  out.check(S, "h_k^ = i^{-k} h_k to 1e-6 for k <= 10", fourier < 1e-6, num(fourier, 3));

  const auto summary = sharp_mean_dispersion_check(first(basis.functions, 11));
  Table t{"sharp mean-dispersion sums for h_0..h_n", {"n", "sum", "(n+1)^2/(2pi)", "(n+1)(2n+1)/(4pi)", "equal"}, {}};
  bool all_equal = true;
  for (std::size_t n = 0; n < summary.running_sums.size(); ++n) {
    const int ni = static_cast<int>(n);
    t.rows.push_back({std::to_string(n), num(summary.running_sums[n]), num(sharp_bound(ni)), num(weak_bound(ni)),
                      summary.equality[n] ? "yes" : "no"});
    all_equal = all_equal && summary.equality[n];
  }
  out.tables.push_back(t);
  out.check(S, "Hermite functions attain the sharp sum for n <= 10", all_equal);
  out.check(S, "equality case identifies the Hermite functions", summary.hermite_identified);

  const int rotations = ctx.strict() ? 400 : 100;
  double worst = INFINITY;
  for (int r = 0; r < rotations; ++r) {
    const auto fam = rotated_hermite_family(basis, 6, ctx.seed + static_cast<std::uint64_t>(r));
    const auto s = sharp_mean_dispersion_check(fam);
    for (std::size_t n = 0; n < s.running_sums.size(); ++n) {
      worst = std::min(worst, s.running_sums[n] - sharp_bound(static_cast<int>(n)));
    }
  }
  out.check(S, std::to_string(rotations) + " rotated Hermite families stay above the sharp bound", worst >= -1e-8,
            "min slack " + num(worst, 3));

  const double h0 = heisenberg_product(basis.functions[0]);
  const double h1 = heisenberg_product(basis.functions[1]);
  out.check(S, "Delta(h_0) Delta(h_0^) = 1/(4pi)", std::abs(h0 - 1.0 / (4.0 * pi)) < 1e-6, num(h0));
  out.check(S, "Delta(h_1) Delta(h_1^) = 3/(4pi)", std::abs(h1 - 3.0 / (4.0 * pi)) < 1e-6, num(h1));
  double floor_all = INFINITY;
  for (int i = 0; i < 20; ++i) {
    floor_all = std::min(floor_all, heisenberg_product(random_localized_function(grid, ctx.seed + 100 + i)));
  }
  out.check(S, "Heisenberg floor 1/(4pi) over the localized corpus", floor_all >= 1.0 / (4.0 * pi) - 1e-8,
            num(floor_all));
}

double time_limited_inner(const PswfBasis& b, int i, int j) {
  using Q = boost::math::quadrature::gauss<double, 30>;
  constexpr int kPanels = 8;
  double sum = 0.0;
  const double w = 2.0 * b.T / kPanels;
  for (int p = 0; p < kPanels; ++p) {
    const double a = -b.T + p * w;
    sum += Q::integrate([&](double t) { return b.value(i, t) * b.value(j, t); }, a, a + w);
  }
  return sum;
}

void pswf_suite(const Context& ctx, Output& out) {
  const std::string S = "pswf";
  const auto lambdas = prolate_eigenvalues(1.0, 1.0, 40);
  double sum = 0.0;
  bool monotone = true;
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    sum += lambdas[n];
    if (n > 0 && lambdas[n] > lambdas[n - 1]) monotone = false;
  }
  out.check(S, "sum lambda_n = 4 T Omega at T = Omega = 1", std::abs(sum - 4.0) < 1e-3, num(sum, 12));
  out.check(S, "lambda_n nonincreasing", monotone);

  const int d = 8;
  const PswfBasis b = build_pswf_basis(1.0, 1.0, d, ctx.grid());
  const Eigen::MatrixXd G = b.l2_gram(d);
  const double whole = (G - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
  double limited = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double expect = i == j ? b.lambdas[static_cast<std::size_t>(i)] : 0.0;
      limited = std::max(limited, std::abs(time_limited_inner(b, i, j) - expect));
    }
  }
  out.check(S, "orthonormal on the real line to 1e-5", whole < 1e-5, num(whole, 3));
  out.check(S, "orthogonal on [-T, T] with norms lambda_n to 1e-5", limited < 1e-5, num(limited, 3));

  Table t{"Landau-Pollak residuals, T = Omega = 2, d = 17", {"seed", "eps", "||f - P_d f||", "7 eps"}, {}};
  const PswfBasis b2 = build_pswf_basis(2.0, 2.0, 20, ctx.grid());
  const int count = ctx.strict() ? 200 : 50;
  bool all = true;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = ctx.seed + 1000 + static_cast<std::uint64_t>(i);
    const SampledFunction f = random_localized_function(ctx.grid(), seed);
    const double eps = in_P_class(f, 2.0, 2.0) * (1.0 + 1e-9);
    const auto rep = landau_pollak_check(f, 2.0, 2.0, eps, b2);
    all = all && rep.residual <= rep.threshold;
    t.rows.push_back({std::to_string(seed), num(eps, 6), num(rep.residual, 6), num(rep.threshold, 6)});
  }
  out.tables.push_back(t);
  out.check(S, "||f - P_d f|| <= 7 eps on " + std::to_string(count) + " localized functions", all);
}

void codes_suite(const Context& ctx, Output& out) {
  const std::string S = "codes";
  struct Case {
    double alpha;
    int dim;
    std::uint64_t expected;
    bool at_most;
  };
  const Case cases[] = {{0.3, 1, 1, false},     {0.3, 2, 2, false},  {kCos45, 2, 4, false},
                        {0.05, 10, 10, false},  {0.2, 10, 16, false}, {0.5, 3, 27, true}};
  Table t{"code bounds", {"alpha", "d", "N", "method", "expected"}, {}};
  for (const auto& c : cases) {
    const auto r = code_upper_bound({c.alpha, c.dim, Field::real});
    const auto v = r.best_upper.value().value_or(0);
    const bool ok = c.at_most ? v <= c.expected : v == c.expected;
    t.rows.push_back({num(c.alpha, 6), std::to_string(c.dim), r.best_upper.to_string(), to_string(r.best_method),
                      (c.at_most ? "<= " : "") + std::to_string(c.expected)});
    out.check(S, "N_R(" + num(c.alpha, 6) + ", " + std::to_string(c.dim) + ")", ok, r.best_upper.to_string());
  }
  out.tables.push_back(t);

  Table g{"greedy lower vs upper bound", {"alpha", "d", "greedy", "upper", "method"}, {}};
  bool sound = true;
  const int trials = ctx.strict() ? 4000 : 600;
  for (double alpha : {0.1, 0.3, 0.5, 0.7}) {
    for (int dim : {2, 3, 4, 5, 8}) {
      const auto code = greedy_code(alpha, dim, Field::real, trials, ctx.seed);
      const auto upper = code_upper_bound({alpha, dim, Field::real});
      const bool valid = verify_code(code, alpha).valid;
      sound = sound && valid && Cardinality::exact(code.size()) <= upper.best_upper;
      g.rows.push_back({num(alpha, 3), std::to_string(dim), std::to_string(code.size()), upper.best_upper.to_string(),
                        to_string(upper.best_method)});
    }
  }
  out.tables.push_back(g);
  out.check(S, "greedy codes are valid and never exceed the upper bound (20 points)", sound);
}

void projections_suite(const Context& ctx, Output& out) {
  const std::string S = "projections";
  const Grid grid = ctx.grid();
  const HermiteBasis h = build_hermite_basis(3, grid);
  const PswfBasis p = build_pswf_basis(2.0, 2.0, 20, grid);
  const int d = landau_pollak_dimension(2.0, 2.0);
  double eps_p = 0.0;
  for (const auto& f : h.functions) eps_p = std::max(eps_p, in_P_class(f, 2.0, 2.0));
  const double eps = 7.0 * eps_p * (1.0 + 1e-9);
  const auto code = onb_to_code(h.functions, p, d, eps, 0.0);
  const double bound = eps * eps / (1.0 - eps * eps);
  out.check(S, "h_0..h_2 on PSWF(2, 2): coherence <= eps^2/(1 - eps^2)", code.coherence <= bound + 1e-8,
            num(code.coherence, 3) + " vs " + num(bound, 3));
  out.data["hermite_on_pswf"] = code;

  Table t{"canonical basis against the complement of (1,...,1)", {"n", "residual", "1/sqrt(n)", "coherence", "alpha"},
          {}};
  for (int n : {4, 9, 16}) {
    const auto ex = canonical_basis_example(n);
    double dev = 0.0;
    for (double r : ex.residuals) dev = std::max(dev, std::abs(r - 1.0 / std::sqrt(n)));
    t.rows.push_back(
        {std::to_string(n), num(ex.residuals[0], 17), num(1.0 / std::sqrt(n), 17), num(ex.coherence), num(ex.alpha_bound)});
    out.check(S, "canonical example n = " + std::to_string(n) + ": residual 1/sqrt(n)", dev < 1e-15, num(dev, 3));
    out.check(S, "canonical example n = " + std::to_string(n) + ": coherence <= alpha",
              ex.coherence <= ex.alpha_bound + 1e-12);
  }
  out.tables.push_back(t);
}

void pipelines_suite(const Context& ctx, Output& out) {
  const std::string S = "pipelines";
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };

  const auto r1 = power_law_bound(2.0, std::sqrt(1.5));
  out.check(S, "power law (2, sqrt 1.5) = 250000", r1.N == Cardinality::exact(250000) && r1.all_assertions_hold(),
            r1.N.to_string());
  const auto r2 = power_law_bound(1.25, 1.0);
  const double v2 = 16.0 * std::pow(400.0 / 1.5, 4.0);
  out.check(S, "power law (1.25, 1) = 16 (400/1.5)^4", rel(*r2.closed_form, v2) < 1e-9, num(*r2.closed_form, 12));
  const auto r3 = power_law_bound(0.75, 0.5);
  const double v3 = std::pow(200.0, 8.0) * std::log10(9.0);
  out.check(S, "power law (0.75, 0.5): log10 N = 200^8 log10 9", rel(*r3.closed_form_log10, v3) < 1e-9,
            num(*r3.closed_form_log10, 12));

  const auto g = gaussian_bound(1.0, std::pow(2.0, 0.25));
  const double gv = 2.0 + 8.0 / pi *
                              std::max(2.0 * std::log(50.0 * std::pow(2.0, 0.25) * std::sqrt(pi) * std::exp(pi)),
                                       std::log(50.0 * pi * std::sqrt(2.0) * std::exp(pi / 2.0) / std::exp(2.0 * pi)));
  out.check(S, "gaussian (1, 2^{1/4}) closed form", rel(*g.closed_form, gv) < 1e-9, num(*g.closed_form, 12));

  Table t{"power-law case 3 along C = sqrt((2p - 1)/2)", {"p", "closed form"}, {}};
  double prev = INFINITY;
  bool decreasing = true;
  for (double p : {10.0, 50.0, 200.0}) {
    const double v = *power_law_bound(p, std::sqrt((2.0 * p - 1.0) / 2.0)).closed_form;
    decreasing = decreasing && v < prev && v > 4.0;
    prev = v;
    t.rows.push_back({num(p, 4), num(v, 12)});
  }
  out.tables.push_back(t);
  out.check(S, "case-3 values decrease toward 4", decreasing);

  Table m{"p = 2 mean-dispersion: combinatorial vs sharp", {"A", "combinatorial N", "sharp count", "ratio"}, {}};
  std::vector<double> logs_A, logs_N;
  bool exceeds = true;
  for (double A : {1.0, 5.0, 10.0}) {
    const auto r = p_mean_dispersion_optimized(A);
    const auto sharp = mean_dispersion_max_count(A);
    exceeds = exceeds && r.N.approx() > static_cast<double>(sharp.n_max) && r.all_assertions_hold();
    logs_A.push_back(std::log(A));
    logs_N.push_back(std::log(r.N.approx()));
    m.rows.push_back({num(A, 3), r.N.to_string(), std::to_string(sharp.n_max),
                      num(r.N.approx() / static_cast<double>(sharp.n_max), 4)});
  }
  out.tables.push_back(m);
  const double slope = (logs_N.back() - logs_N.front()) / (logs_A.back() - logs_A.front());
  out.check(S, "combinatorial bound exceeds the sharp count", exceeds);
  out.check(S, "log-log slope 4 +- 0.3", std::abs(slope - 4.0) <= 0.3, num(slope, 6));

  Table u{"umbrella bound vs Hermite families under fitted envelopes", {"envelope", "m", "N"}, {}};
  for (const std::string kind : {"power", "gauss", "tabulated"}) {
    constexpr int m_size = 8;
    const auto ef = hermite_envelope_family(kind, m_size, ctx.grid());
    bool dominated = true;
    for (const auto& f : ef.family) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        dominated = dominated && std::abs(f[j]) <= ef.envelope.value(f.grid().point(j)) * (1.0 + 1e-12);
      }
    }
    const auto r = umbrella_bound(ef.envelope, ef.envelope);
    u.rows.push_back({ef.envelope.describe(), std::to_string(m_size), r.N.to_string()});
    out.check(S, kind + " envelope dominates the family", dominated);
    out.check(S, kind + " envelope: family size <= N", Cardinality::exact(m_size) <= r.N && r.all_assertions_hold(),
              r.N.to_string());
  }
  out.tables.push_back(u);
}

void riesz_suite(const Context& ctx, Output& out) {
  const std::string S = "riesz";
  out.check(S, "C(U) = 0 at an isometry", orthogonalizer_stats(1.0, 1.0).C_U == 0.0);
  const double c11 = orthogonalizer_stats(1.0, std::sqrt(1.1)).C_U;
  out.check(S, "C(U) at (1, sqrt 1.1) = sqrt(2)(1 - 1/1.1)", std::abs(c11 - std::sqrt(2.0) * (1.0 - 1.0 / 1.1)) < 1e-15,
            num(c11));
  bool identity = true;
  for (double e : {0.01, 0.1, 0.3, 0.5}) {
    identity = identity && riesz_alpha(e, orthogonalizer_stats(1.0, 1.0)) == e * e / (1.0 - e * e);
  }
  out.check(S, "riesz_alpha at U = I equals eps^2/(1 - eps^2) exactly", identity);

  const HermiteBasis basis = build_hermite_basis(10, ctx.grid());
  const int families = ctx.strict() ? 400 : 100;
  bool frames = true, angles = true, traces = true;
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<int> size(3, 8);
  std::uniform_real_distribution<double> lo(0.75, 1.0), hi(1.0, 1.3);
  for (int i = 0; i < families; ++i) {
    const int m = size(rng);
    const Eigen::MatrixXd mix = random_mixing(m, lo(rng), hi(rng), ctx.seed + static_cast<std::uint64_t>(i));
    const auto fam = mixed_family(basis.functions, mix.cast<complex>());
    const auto stats = stats_from_mixing(mix.cast<complex>());
    const auto w = frame_witness(fam, stats, 50, ctx.seed + 7 * static_cast<std::uint64_t>(i));
    frames = frames && w.frame_holds;
    angles = angles && w.angles_hold;
    traces = traces && riesz_trace_bound(fam, stats.norm_U).holds;
  }
  const std::string n = std::to_string(families);
  out.check(S, "frame inequality on " + n + " synthetic families", frames);
  out.check(S, "angle bound on " + n + " synthetic families", angles);
  out.check(S, "trace inequality with ||U||^2 on " + n + " synthetic families", traces);

  Table t{"umbrella-riesz beta sweep (gaussian 1, 2^{1/4})", {"beta", "eps", "alpha used", "N"}, {}};
  const Envelope env = Envelope::gaussian(1.0, std::pow(2.0, 0.25));
  const auto base = umbrella_bound(env, env);
  const auto zero = umbrella_riesz_bound(env, env, 0.0);
  out.check(S, "beta = 0 reproduces the umbrella bound bit for bit",
            base.N == zero.N && base.get("alpha") == zero.get("alpha_used") && base.get("T") == zero.get("T"));
  Cardinality prev = Cardinality::exact(1);
  bool monotone = true;
  for (double beta : {0.0, 0.01, 0.05, 0.1, 0.2, 0.3}) {
    const auto r = umbrella_riesz_bound(env, env, beta);
    monotone = monotone && !(r.N < prev);
    prev = r.N;
    t.rows.push_back({num(beta, 3), num(r.get("eps"), 6), num(r.get("alpha_used"), 6), r.N.to_string()});
  }
  out.tables.push_back(t);
  out.check(S, "N nondecreasing in beta", monotone);
}

}  // namespace

void run_verify(const Context& ctx, const std::string& suite, Output& out) {
  const bool all = suite == "all";
  bool matched = false;
  auto run = [&](const char* name, void (*fn)(const Context&, Output&)) {
    if (!all && suite != name) return;
    matched = true;
    try {
      fn(ctx, out);
    } catch (const std::exception& e) {
      out.check(name, "suite completed", false, e.what());
    }
  };
  run("hermite", hermite_suite);
  run("pswf", pswf_suite);
  run("codes", codes_suite);
  run("projections", projections_suite);
  run("pipelines", pipelines_suite);
  run("riesz", riesz_suite);
  if (!matched) throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace orthobound::cli
