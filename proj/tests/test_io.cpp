#include <cmath>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "orthobound/corpus.hpp"
#include "orthobound/error.hpp"
#include "orthobound/io.hpp"

using namespace orthobound;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("orthobound_io_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

double max_diff(const SampledFunction& a, const SampledFunction& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace

TEST_CASE("sampled functions round-trip through CSV and JSON") {
  const TempDir tmp;
  const Grid g(8.0, 512);
  const SampledFunction f = random_localized_function(g, 3);
  for (const char* name : {"f.csv", "f.json"}) {
    const fs::path p = tmp.path / name;
    write_sampled_function(p, f);
    const SampledFunction back = read_sampled_function(p);
    CHECK(back.grid() == g);
    CHECK(max_diff(back, f) < 1e-15);
  }
}

TEST_CASE("families round-trip") {
  const TempDir tmp;
  const Grid g(8.0, 256);
  const HermiteBasis b = build_hermite_basis(3, g);
  for (const char* name : {"fam.csv", "fam.json"}) {
    const fs::path p = tmp.path / name;
    write_family(p, b.functions);
    const auto back = read_family(p);
    REQUIRE(back.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) CHECK(max_diff(back[k], b.functions[k]) < 1e-15);
  }
}

TEST_CASE("malformed files are rejected") {
  const TempDir tmp;
  const fs::path p = tmp.path / "bad.csv";
  std::ofstream(p) << "t,re,im\n0,1,0\n0.5,1,0\n2,1,0\n";
  CHECK_THROWS_AS(read_sampled_function(p), PreconditionError);
  const fs::path q = tmp.path / "bad.json";
  std::ofstream(q) << "{\"re\": [1, 2]}";
  CHECK_THROWS_AS(read_sampled_function(q), PreconditionError);
}

TEST_CASE("JSON for reports") {
  const auto r = gaussian_bound(1.0, std::pow(2.0, 0.25));
  const nlohmann::json j = r;
  CHECK(j["pipeline"] == "gaussian");
  CHECK(j["N"]["exact"] == 41);
  CHECK(j["all_assertions_hold"] == true);
  CHECK(j.contains("closed_form"));
  CHECK(j["related"].is_array());

  const nlohmann::json big = Cardinality::floor_of_log10(50.0);
  CHECK_FALSE(big.contains("exact"));
  CHECK(big["log10"] == 50.0);

  const nlohmann::json c = code_upper_bound({0.2, 10, Field::real});
  CHECK(c["best_method"] == to_string(BoundMethod::delsarte));
}

TEST_CASE("manifest JSON has no timestamps and is reproducible") {
  RunManifest m{"orthobound bound gaussian", {{"a", "1"}}, 7, "fast", {}};
  const nlohmann::json a = m, b = m;
  CHECK(a.dump() == b.dump());
  CHECK(a["version"] == version_string());
  CHECK_FALSE(a.contains("timestamp"));
}

TEST_CASE("table formatting") {
  Table t{"demo", {"x", "long column"}, {{"1", "2"}, {"333", "4"}}};
  const std::string s = format_table(t);
  CHECK(s.find("demo") != std::string::npos);
  CHECK(s.find("long column") != std::string::npos);
  const TempDir tmp;
  write_csv(tmp.path / "t.csv", t);
  std::ifstream in(tmp.path / "t.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,long column");
}

TEST_CASE("report text contains the trace") {
  const std::string s = format_report(power_law_bound(2.0, std::sqrt(1.5)));
  CHECK(s.find("250000") != std::string::npos);
}
