#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "orthobound/bounds.hpp"
#include "orthobound/error.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/io.hpp"
#include "orthobound/projections.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/riesz.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound::cli {

using nlohmann::json;

std::string num(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

bool Output::ok() const {
  return std::ranges::all_of(checks, [](const Check& c) { return c.passed; });
}

namespace {

std::string slug(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "table" : out;
}

}  // namespace

int emit(const Context& ctx, Output& out) {
  if (!ctx.csv_dir.empty()) {
    for (std::size_t i = 0; i < out.tables.size(); ++i) {
      const auto path = std::filesystem::path(ctx.csv_dir) / (std::to_string(i) + "_" + slug(out.tables[i].name) + ".csv");
      write_csv(path, out.tables[i]);
      out.manifest.outputs.push_back(path.string());
    }
  }
  const bool ok = out.ok();
  if (ctx.json) {
    json checks = json::array();
    for (const auto& c : out.checks) {
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json doc = {{"manifest", out.manifest}, {"status", ok ? "pass" : "fail"}, {"checks", checks},
                {"tables", out.tables}, {"notes", out.lines}, {"data", out.data}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& l : out.lines) std::cout << l << '\n';
    for (const auto& t : out.tables) std::cout << '\n' << format_table(t);
    if (!out.checks.empty()) std::cout << '\n';
    std::string suite;
    for (const auto& c : out.checks) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << (c.suite.empty() ? "" : c.suite + ": ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << '\n';
    }
    if (!out.checks.empty()) {
      const auto failed = std::ranges::count_if(out.checks, [](const Check& c) { return !c.passed; });
      std::cout << (ok ? "all " + std::to_string(out.checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(out.checks.size()) + " checks failed")
                << '\n';
    }
  }
  return ok ? kPass : kAssertionFailure;
}

namespace {

void record_bound(Output& out, const BoundReport& r) {
  out.lines.push_back(format_report(r));
  out.data["report"] = r;
  out.check(r.pipeline, "pipeline assertions hold", r.all_assertions_hold());
}

Field parse_field(const std::string& f) { return f == "c" || f == "complex" ? Field::complex : Field::real; }

}  // namespace

}  // namespace orthobound::cli

int main(int argc, char** argv) {
  using namespace orthobound;
  using namespace orthobound::cli;

  Context ctx;
  Output out;
  std::function<void()> action;

  CLI::App app{"Time-frequency localization bounds for orthonormal families"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--grid-L", ctx.grid_L, "half-width of the sampling grid")->check(CLI::PositiveNumber);
  app.add_option("--grid-n", ctx.grid_n, "number of grid points")->check(CLI::Range(16, 1 << 22));
  app.add_option("--tol-profile", ctx.tol_profile, "fast or strict (larger corpora)")
      ->check(CLI::IsMember({"fast", "strict"}));
  app.add_option("--seed", ctx.seed, "seed for every randomized step");
  app.add_flag("--json", ctx.json, "emit a JSON report instead of text");
  app.add_option("--csv", ctx.csv_dir, "directory for CSV exports of every table");

  // verify
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "hermite, pswf, codes, projections, pipelines, riesz or all")
      ->check(CLI::IsMember({"hermite", "pswf", "codes", "projections", "pipelines", "riesz", "all"}));
  verify->callback([&] { action = [&] { run_verify(ctx, suite, out); }; });

  auto* reproduce = app.add_subcommand("reproduce", "emit every table in one bundle");
  reproduce->callback([&] { action = [&] { run_reproduce(ctx, out); }; });

  // pswf build
  double T = 1.0, Omega = 1.0;
  int d = 0;
  std::string pswf_out;
  bool samples = false;
  auto* pswf = app.add_subcommand("pswf", "prolate spheroidal wave functions")->require_subcommand(1);
  auto* pswf_build = pswf->add_subcommand("build", "compute a PSWF basis");
  pswf_build->add_option("--T", T, "time half-width")->required()->check(CLI::PositiveNumber);
  pswf_build->add_option("--Omega", Omega, "band half-width")->required()->check(CLI::PositiveNumber);
  pswf_build->add_option("--d", d, "number of functions (default floor(4 T Omega) + 2)");
  pswf_build->add_option("--out", pswf_out, "write the basis as JSON (or CSV family)");
  pswf_build->add_flag("--samples", samples, "include samples in the JSON report");
  pswf_build->callback([&] {
    action = [&] {
      const int dm = d > 0 ? d : landau_pollak_dimension(T, Omega) + 1;
      const PswfBasis b = build_pswf_basis(T, Omega, dm, ctx.grid());
      Table t{"PSWF eigenvalues", {"n", "lambda_n"}, {}};
      for (std::size_t n = 0; n < b.lambdas.size(); ++n) t.rows.push_back({std::to_string(n), num(b.lambdas[n], 15)});
      out.tables.push_back(t);
      out.data["basis"] = pswf_to_json(b, samples);
      out.lines.push_back("c = " + num(b.bandwidth()) + ", Landau-Pollak d = " +
                          std::to_string(landau_pollak_dimension(T, Omega)));
      if (!pswf_out.empty()) {
        write_family(pswf_out, b.functions);
        out.manifest.outputs.push_back(pswf_out);
      }
    };
  });

  // code-bound / code-search
  double alpha = 0.0;
  std::int64_t dim = 1;
  std::string field = "r";
  int trials = 1000;
  auto* cb = app.add_subcommand("code-bound", "upper bounds on spherical code sizes");
  cb->add_option("--alpha", alpha, "coherence bound in [0, 1)")->required();
  cb->add_option("--dim", dim, "ambient dimension")->required();
  cb->add_option("--field", field, "r or c")->check(CLI::IsMember({"r", "c", "real", "complex"}));
  cb->callback([&] {
    action = [&] {
      const auto r = code_upper_bound({alpha, dim, parse_field(field)});
      Table t{"code bound methods", {"method", "bound"}, {}};
      for (const auto& [m, v] : r.methods) t.rows.push_back({to_string(m), v ? v->to_string() : "n/a"});
      out.tables.push_back(t);
      out.lines.push_back("N <= " + r.best_upper.to_string() + " (" + to_string(r.best_method) + ")");
      out.data["code_bound"] = r;
    };
  });
  auto* cs = app.add_subcommand("code-search", "randomized construction of a code");
  cs->add_option("--alpha", alpha, "coherence bound in [0, 1)")->required();
  cs->add_option("--dim", dim, "ambient dimension")->required()->check(CLI::Range(1, 4096));
  cs->add_option("--trials", trials, "random candidates per strategy")->check(CLI::NonNegativeNumber);
  cs->add_option("--field", field, "r or c")->check(CLI::IsMember({"r", "c", "real", "complex"}));
  cs->callback([&] {
    action = [&] {
      const auto code = greedy_code(alpha, static_cast<int>(dim), parse_field(field), trials, ctx.seed);
      const auto v = verify_code(code, alpha);
      auto r = code_upper_bound({alpha, dim, parse_field(field)});
      r.lower_bound = code.size();
      out.lines.push_back("constructed " + std::to_string(code.size()) + " vectors, coherence " +
                          num(v.max_coherence) + "; upper bound " + r.best_upper.to_string());
      out.check("code-search", "code is valid", v.valid, num(v.max_coherence));
      out.check("code-search", "size within the upper bound", Cardinality::exact(code.size()) <= r.best_upper);
      out.data["code_bound"] = r;
    };
  });

  // project-code
  std::string family_path, basis_kind = "pswf";
  double epsilon = 0.0;
  std::optional<double> eta;
  auto* pc = app.add_subcommand("project-code", "spherical code from a sampled family");
  pc->add_option("--family", family_path, "CSV or JSON family file")->required()->check(CLI::ExistingFile);
  pc->add_option("--basis", basis_kind, "pswf or hermite")->check(CLI::IsMember({"pswf", "hermite"}));
  pc->add_option("--d", d, "number of basis functions")->required()->check(CLI::PositiveNumber);
  pc->add_option("--epsilon", epsilon, "residual bound, below 1/sqrt(2)")->required();
  pc->add_option("--T", T, "PSWF time half-width");
  pc->add_option("--Omega", Omega, "PSWF band half-width");
  pc->add_option("--eta", eta, "declared bound: |<f_j, f_k>| <= eta^2");
  pc->callback([&] {
    action = [&] {
      const auto family = read_family(family_path);
      const Grid& g = family.front().grid();
      CodeFromFamily c;
      if (basis_kind == "hermite") {
        c = onb_to_code(family, build_hermite_basis(d, g), d, epsilon, eta);
      } else {
        const int dm = std::max(d, landau_pollak_dimension(T, Omega) + 1);
        c = onb_to_code(family, build_pswf_basis(T, Omega, dm, g), d, epsilon, eta);
      }
      const auto bound = code_upper_bound({std::min(c.alpha_bound, std::nextafter(1.0, 0.0)), c.d, c.code.field});
      out.lines.push_back("coherence " + num(c.coherence) + " <= alpha " + num(c.alpha_bound) + "; family of " +
                          std::to_string(c.code.size()) + " <= " + bound.best_upper.to_string());
      out.check("project-code", "coherence within alpha", c.coherence <= c.alpha_bound + 1e-10);
      out.check("project-code", "family size within the code bound",
                Cardinality::exact(c.code.size()) <= bound.best_upper);
      out.data["code"] = c;
      out.data["code_bound"] = bound;
    };
  });

  // bound ...
  auto* bound = app.add_subcommand("bound", "quantitative bound pipelines")->require_subcommand(1);
  std::string phi_spec, psi_spec;
  std::optional<double> eps_opt;
  double p = 2.0, phat = 2.0, C = 1.0, a = 1.0, A = 1.0, beta = 0.0;
  bool search = false;

  auto* um = bound->add_subcommand("umbrella", "generic umbrella pipeline");
  um->add_option("--phi", phi_spec, "power:p,C or gauss:a,C")->required();
  um->add_option("--psi", psi_spec, "power:p,C or gauss:a,C")->required();
  um->add_option("--epsilon", eps_opt, "tail level (default 1/(50M))");
  um->callback([&] {
    action = [&] { record_bound(out, umbrella_bound(parse_envelope(phi_spec), parse_envelope(psi_spec), eps_opt)); };
  });

  auto* md = bound->add_subcommand("mean-dispersion", "orthonormal families with bounded p-means and dispersions");
  md->add_option("--A", A, "bound on means and dispersions")->required()->check(CLI::PositiveNumber);
  md->add_option("--p", p, "exponent p > 1 (default 2)");
  md->add_option("--epsilon", eps_opt, "eps in (0, 1/(7 sqrt 2)); default: optimized choice at p = 2");
  md->callback([&] {
    action = [&] {
      const auto sharp = mean_dispersion_max_count(A);
      if (p == 2.0) {
        out.lines.push_back("sharp count: at most " + std::to_string(sharp.n_max_sharp + 1) + " elements (8 pi A^2 = " +
                            num(sharp.headline) + "), n_max = " + std::to_string(sharp.n_max));
        if (sharp.heisenberg_infeasible) out.lines.push_back("A is below the Heisenberg floor: no element fits");
      }
      if (!eps_opt && p != 2.0) throw DomainError("--epsilon is required for p != 2");
      record_bound(out, eps_opt ? p_mean_dispersion_bound(A, p, *eps_opt) : p_mean_dispersion_optimized(A));
    };
  });

  auto* pl = bound->add_subcommand("power-law", "envelopes C (1 + |x|)^-p");
  pl->add_option("--p", p, "decay exponent > 1/2")->required();
  pl->add_option("--C", C, "envelope constant")->required();
  pl->callback([&] { action = [&] { record_bound(out, power_law_bound(p, C)); }; });

  auto* ga = bound->add_subcommand("gaussian", "envelopes C exp(-pi a x^2)");
  ga->add_option("--a", a, "0 < a <= 1")->required();
  ga->add_option("--C", C, "envelope constant")->required();
  ga->callback([&] { action = [&] { record_bound(out, gaussian_bound(a, C)); }; });

  auto* ur = bound->add_subcommand("umbrella-riesz", "umbrella pipeline for near-isometric Riesz sequences");
  ur->add_option("--phi", phi_spec, "power:p,C or gauss:a,C")->required();
  ur->add_option("--psi", psi_spec, "power:p,C or gauss:a,C")->required();
  ur->add_option("--beta", beta, "near-isometry parameter")->required()->check(CLI::NonNegativeNumber);
  ur->add_option("--epsilon", eps_opt, "tail level (default: largest admissible)");
  ur->add_flag("--search", search, "scan eps for the smallest bound");
  ur->callback([&] {
    action = [&] {
      const Envelope phi = parse_envelope(phi_spec), psi = parse_envelope(psi_spec);
      if (search && eps_opt) throw DomainError("--search and --epsilon are exclusive");
      record_bound(out, search ? umbrella_riesz_best(phi, psi, beta) : umbrella_riesz_bound(phi, psi, beta, eps_opt));
    };
  });

  auto* ho = bound->add_subcommand("holder", "product envelopes controlled in L^{2p}");
  ho->add_option("--p", p, "time exponent in [1, inf)")->required();
  ho->add_option("--phat", phat, "frequency exponent in [1, inf)")->required();
  ho->add_option("--C", C, "bound on the factor norms")->required();
  ho->add_option("--phi", phi_spec, "power:p,C or gauss:a,C")->required();
  ho->add_option("--psi", psi_spec, "power:p,C or gauss:a,C")->required();
  ho->add_option("--epsilon", eps_opt, "tail energy level, below 1/98")->required();
  ho->callback([&] {
    action = [&] {
      record_bound(out, holder_envelope_bound(p, phat, C, parse_envelope(phi_spec), parse_envelope(psi_spec), *eps_opt));
    };
  });

  // riesz
  double normU = 1.0, normUinv = 1.0;
  auto* riesz = app.add_subcommand("riesz", "Riesz-sequence constants")->require_subcommand(1);
  auto* ra = riesz->add_subcommand("alpha", "code coherence for a Riesz sequence");
  ra->add_option("--epsilon", epsilon, "projection error")->required();
  ra->add_option("--normU", normU, "||U||")->required();
  ra->add_option("--normUinv", normUinv, "||U^-1||")->required();
  ra->callback([&] {
    action = [&] {
      const auto s = orthogonalizer_stats(normU, normUinv);
      const auto ceiling = riesz_eps_ceiling(s);
      const double value = riesz_alpha(epsilon, s);
      out.lines.push_back("C(U) = " + num(s.C_U) + ", eps ceiling " + num(ceiling.value) + " (" + ceiling.binding +
                          "), alpha = " + num(value, 15));
      out.data["stats"] = s;
      out.data["alpha"] = value;
      out.data["eps_ceiling"] = ceiling.value;
    };
  });
  auto* rs = riesz->add_subcommand("stats", "angle constant and element norm range");
  rs->add_option("--normU", normU, "||U||")->required();
  rs->add_option("--normUinv", normUinv, "||U^-1||")->required();
  rs->callback([&] {
    action = [&] {
      const auto s = orthogonalizer_stats(normU, normUinv);
      out.lines.push_back("C(U) = " + num(s.C_U) + "; " + num(s.min_element_norm()) + " <= ||x_k|| <= " +
                          num(s.max_element_norm()));
      out.data["stats"] = s;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsageError;
  }

  out.manifest.command = "orthobound";
  for (int i = 1; i < argc; ++i) out.manifest.command += std::string(" ") + argv[i];
  out.manifest.seed = ctx.seed;
  out.manifest.tolerance_profile = ctx.tol_profile;
  out.manifest.parameters = {{"grid_L", num(ctx.grid_L, 17)}, {"grid_n", std::to_string(ctx.grid_n)}};
  for (const CLI::App* sub = &app; sub != nullptr;) {
    const auto subs = sub->get_subcommands();
    if (subs.empty()) break;
    sub = subs.front();
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      std::string v;
      for (const auto& r : opt->results()) v += (v.empty() ? "" : ",") + r;
      out.manifest.parameters.emplace_back(sub->get_name() + "." + opt->get_name(), v.empty() ? "true" : v);
    }
  }

  try {
    if (action) action();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << '\n';
    out.check("", "command completed", false, e.what());
    emit(ctx, out);
    return kAssertionFailure;
  }
  try {
    return emit(ctx, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertionFailure;
  }
}
