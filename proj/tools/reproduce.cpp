#include <cmath>
#include <numbers>

#include "cli.hpp"
#include "orthobound/bounds.hpp"
#include "orthobound/corpus.hpp"
#include "orthobound/error.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/numerics.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/riesz.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound::cli {

using std::numbers::pi;

void run_reproduce(const Context& ctx, Output& out) {
  const Grid grid = ctx.grid();
  const HermiteBasis h = build_hermite_basis(11, grid);

  Table disp{"Hermite dispersions", {"n", "Delta^2(h_n)", "(2n+1)/(4pi)"}, {}};
  for (int n = 0; n <= 10; ++n) {
    disp.rows.push_back({std::to_string(n), num(variance(h.functions[static_cast<std::size_t>(n)]), 12),
                         num((2.0 * n + 1.0) / (4.0 * pi), 12)});
  }
  out.tables.push_back(disp);

  const auto summary = sharp_mean_dispersion_check(h.functions);
  Table sharp{"sharp mean-dispersion bound", {"n", "Hermite sum", "(n+1)^2/(2pi)", "(n+1)(2n+1)/(4pi)"}, {}};
  for (std::size_t n = 0; n < summary.running_sums.size(); ++n) {
    sharp.rows.push_back({std::to_string(n), num(summary.running_sums[n], 12),
                          num(sharp_bound(static_cast<int>(n)), 12), num(weak_bound(static_cast<int>(n)), 12)});
  }
  out.tables.push_back(sharp);

  Table lp{"Landau-Pollak residuals", {"T", "Omega", "d", "seed", "eps", "residual", "7 eps"}, {}};
  for (const double T : {1.0, 2.0}) {
    const int d = landau_pollak_dimension(T, T);
    const PswfBasis b = build_pswf_basis(T, T, d + 3, grid);
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t seed = ctx.seed + static_cast<std::uint64_t>(i);
      const SampledFunction f = random_localized_function(grid, seed);
      const double eps = in_P_class(f, T, T) * (1.0 + 1e-9);
      const auto r = landau_pollak_check(f, T, T, eps, b);
      lp.rows.push_back({num(T, 3), num(T, 3), std::to_string(d), std::to_string(seed), num(eps, 6),
                         num(r.residual, 6), num(r.threshold, 6)});
    }
  }
  out.tables.push_back(lp);

  Table codes{"spherical code bounds", {"alpha", "d", "field", "N", "method"}, {}};
  const CodeBoundQuery queries[] = {{0.3, 1, Field::real},  {0.3, 2, Field::real},    {std::cos(pi / 4), 2, Field::real},
                                    {0.05, 10, Field::real}, {0.2, 10, Field::real},   {0.5, 3, Field::real},
                                    {0.2, 10, Field::complex}, {0.02, 4, Field::complex}};
  for (const auto& q : queries) {
    const auto r = code_upper_bound(q);
    codes.rows.push_back({num(q.alpha, 6), std::to_string(q.dim), to_string(q.field), r.best_upper.to_string(),
                          to_string(r.best_method)});
  }
  out.tables.push_back(codes);

  Table props{"proposition values", {"bound", "parameters", "closed form", "N"}, {}};
  auto add_prop = [&](const std::string& name, const std::string& params, const BoundReport& r) {
    const std::string cf = r.closed_form ? num(*r.closed_form, 12)
                                         : (r.closed_form_log10 ? "10^" + num(*r.closed_form_log10, 12) : "");
    props.rows.push_back({name, params, cf, r.N.to_string()});
    out.data["propositions"].push_back(r);
  };
  add_prop("power-law", "p=2, C=sqrt(1.5)", power_law_bound(2.0, std::sqrt(1.5)));
  add_prop("power-law", "p=1.25, C=1", power_law_bound(1.25, 1.0));
  add_prop("power-law", "p=0.75, C=0.5", power_law_bound(0.75, 0.5));
  add_prop("gaussian", "a=1, C=2^{1/4}", gaussian_bound(1.0, std::pow(2.0, 0.25)));
  add_prop("gaussian", "a=1, C=10", gaussian_bound(1.0, 10.0));
  for (double A : {1.0, 5.0, 10.0}) {
    add_prop("p-mean-dispersion", "p=2, A=" + num(A, 3), p_mean_dispersion_optimized(A));
  }
  out.tables.push_back(props);

  Table riesz{"Riesz constants", {"||U||", "||U^-1||", "C(U)", "min-form C(U)", "riesz alpha at eps=0.1"}, {}};
  for (const auto& [a, b] : {std::pair{1.0, 1.0}, {1.0, std::sqrt(1.1)}, {1.05, 1.05}, {std::sqrt(1.1), std::sqrt(1.1)}}) {
    const auto s = orthogonalizer_stats(a, b);
    std::string alpha;
    try {
      alpha = num(riesz_alpha(0.1, s), 8);
    } catch (const DomainError&) {
      alpha = "inadmissible";
    }
    riesz.rows.push_back({num(a, 8), num(b, 8), num(s.C_U, 8), num(angle_constant_min_form(a, b), 8), alpha});
  }
  out.tables.push_back(riesz);
  out.lines.push_back("largest admissible beta for the Riesz umbrella: " + num(max_admissible_beta(), 12));
  out.lines.push_back("near-isometry angle bound at beta = 0.1: " + num(near_isometry_angle_bound(0.1), 12));
}

}  // namespace orthobound::cli
