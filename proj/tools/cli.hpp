#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthobound/grid.hpp"
#include "orthobound/io.hpp"

namespace orthobound::cli {

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kUsageError = 2 };

/// Global flags shared by every subcommand.
struct Context {
  double grid_L = Grid::kDefaultHalfWidth;
  std::size_t grid_n = Grid::kDefaultPoints;
  std::string tol_profile = "fast";
  std::uint64_t seed = 20240917;
  bool json = false;
  std::string csv_dir;

  Grid grid() const { return Grid(grid_L, grid_n); }
  bool strict() const { return tol_profile == "strict"; }
};

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Everything a command produces; rendered as text or JSON at the end.
struct Output {
  RunManifest manifest;
  std::vector<std::string> lines;
  std::vector<Table> tables;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();

  void check(const std::string& suite, const std::string& name, bool passed, const std::string& detail = {}) {
    checks.push_back({suite, name, passed, detail});
  }
  bool ok() const;
};

/// Writes CSV tables (if requested), then the report; returns the exit code.
int emit(const Context& ctx, Output& out);

std::string num(double x, int digits = 10);

// Subcommands. Each fills `out`; errors propagate as exceptions.
void run_verify(const Context& ctx, const std::string& suite, Output& out);
void run_reproduce(const Context& ctx, Output& out);

}  // namespace orthobound::cli
