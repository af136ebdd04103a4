#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthobound/bounds.hpp"
#include "orthobound/cardinality.hpp"
#include "orthobound/grid.hpp"
#include "orthobound/projections.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/riesz.hpp"
#include "orthobound/sphere_codes.hpp"

namespace orthobound {

std::string version_string();

/// Everything needed to reproduce a report. Reports carry no timestamps, so
/// an identical manifest yields a byte-identical report.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string tolerance_profile = "fast";
  std::vector<std::string> outputs;
};

/// Rows of preformatted cells under named columns.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Aligned plain-text rendering with a title line.
std::string format_table(const Table& t);
void write_csv(const std::filesystem::path& path, const Table& t);

void to_json(nlohmann::json& j, const RunManifest& m);
void to_json(nlohmann::json& j, const Cardinality& c);
void to_json(nlohmann::json& j, const CodeBoundReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const OrthogonalizerStats& s);
void to_json(nlohmann::json& j, const CodeFromFamily& c);
void to_json(nlohmann::json& j, const Table& t);
void to_json(nlohmann::json& j, const Grid& g);

/// Human-readable trace of a bound pipeline.
std::string format_report(const BoundReport& r);

/// Samples as CSV (header t,re,im) or JSON ({"grid": {...}, "re": [...],
/// "im": [...]}), chosen by extension. The grid is recovered from the
/// abscissae (CSV) or the metadata (JSON); reading throws PreconditionError
/// on a malformed or non-uniform file.
SampledFunction read_sampled_function(const std::filesystem::path& path);
void write_sampled_function(const std::filesystem::path& path, const SampledFunction& f);

/// Families share one grid: CSV columns t,re_0,im_0,re_1,im_1,... or JSON
/// {"grid": {...}, "functions": [{"re": [...], "im": [...]}, ...]}.
std::vector<SampledFunction> read_family(const std::filesystem::path& path);
void write_family(const std::filesystem::path& path, std::span<const SampledFunction> family);

/// Grid metadata, eigenvalues and the sampled functions of a PSWF basis.
nlohmann::json pswf_to_json(const PswfBasis& basis, bool include_samples);

}  // namespace orthobound
