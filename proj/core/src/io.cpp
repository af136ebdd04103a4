#include "orthobound/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orthobound/error.hpp"

namespace orthobound {

using nlohmann::json;

namespace {

std::string lower_extension(const std::filesystem::path& p) {
  std::string e = p.extension().string();
  std::ranges::transform(e, e.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return e;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out.precision(17);
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  return in;
}

// Rows of numbers, skipping a header line and blank lines.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (lineno == 1 && line.find_first_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw PreconditionError(path.string() + ":" + std::to_string(lineno) + ": not a number: '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw PreconditionError(path.string() + ":" + std::to_string(lineno) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw PreconditionError(path.string() + ": no data rows");
  return rows;
}

Grid grid_from_abscissae(const std::vector<std::vector<double>>& rows, const std::string& where) {
  const std::size_t n = rows.size();
  if (n < Grid::kMinPoints) throw PreconditionError(where + ": too few samples for a grid");
  const double L = -rows.front()[0];
  if (!(L > 0.0) || std::abs(rows.back()[0] - L) > 1e-9 * L) {
    throw PreconditionError(where + ": abscissae must run symmetrically from -L to L");
  }
  const Grid g(L, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(rows[j][0] - g.point(j)) > 1e-9 * std::max(1.0, L)) {
      throw PreconditionError(where + ": abscissae are not uniformly spaced (row " + std::to_string(j + 1) + ")");
    }
  }
  return g;
}

Grid grid_from_json(const json& j, const std::string& where) {
  try {
    return Grid(j.at("half_width").get<double>(), j.at("points").get<std::size_t>());
  } catch (const json::exception& e) {
    throw PreconditionError(where + ": bad grid metadata: " + e.what());
  }
}

std::vector<complex> values_from_json(const json& j, std::size_t n, const std::string& where) {
  try {
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size());
    if (re.size() != n || im.size() != n) throw PreconditionError(where + ": sample count does not match grid");
    std::vector<complex> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = {re[k], im[k]};
    return v;
  } catch (const json::exception& e) {
    throw PreconditionError(where + ": " + e.what());
  }
}

json values_to_json(const SampledFunction& f) {
  std::vector<double> re, im;
  for (const auto& v : f.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {{"re", re}, {"im", im}};
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

std::string version_string() { return "0.3.0"; }

std::string format_table(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  if (!t.name.empty()) out << t.name << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      out << "  " << cell << std::string(width[c] - cell.size(), ' ');
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

void write_csv(const std::filesystem::path& path, const Table& t) {
  std::ofstream out = open_out(path);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const bool quote = cells[c].find_first_of(",\"") != std::string::npos;
      if (c) out << ',';
      if (quote) {
        out << '"';
        for (char ch : cells[c]) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << cells[c];
      }
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

void to_json(json& j, const RunManifest& m) {
  json params = json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  j = {{"tool", "orthobound"},
       {"version", version_string()},
       {"command", m.command},
       {"parameters", params},
       {"seed", m.seed},
       {"tolerance_profile", m.tolerance_profile},
       {"outputs", m.outputs}};
}

void to_json(json& j, const Cardinality& c) {
  j = {{"display", c.to_string()}, {"log10", c.log10()}};
  if (c.is_exact()) j["exact"] = *c.value();
}

void to_json(json& j, const CodeBoundReport& r) {
  json methods = json::object();
  for (const auto& [m, v] : r.methods) methods[to_string(m)] = v ? json(*v) : json(nullptr);
  j = {{"alpha", r.query.alpha},
       {"dim", r.query.dim},
       {"field", to_string(r.query.field)},
       {"best_upper", r.best_upper},
       {"best_method", to_string(r.best_method)},
       {"methods", methods}};
  if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
}

void to_json(json& j, const BoundReport& r) {
  auto named = [](const std::vector<NamedValue>& v) {
    json o = json::array();
    for (const auto& nv : v) o.push_back({{"name", nv.name}, {"value", nv.value}});
    return o;
  };
  json asserts = json::array();
  for (const auto& a : r.assertions) asserts.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  j = {{"pipeline", r.pipeline},
       {"inputs", named(r.inputs)},
       {"intermediates", named(r.intermediates)},
       {"envelopes", r.envelopes},
       {"assertions", asserts},
       {"trace", r.trace},
       {"N", r.N},
       {"tight_method", r.tight_method},
       {"all_assertions_hold", r.all_assertions_hold()}};
  if (r.closed_form) j["closed_form"] = *r.closed_form;
  if (r.closed_form_log10) j["closed_form_log10"] = *r.closed_form_log10;
  if (r.code_bound) j["code_bound"] = *r.code_bound;
  if (!r.related.empty()) j["related"] = r.related;
}

void to_json(json& j, const OrthogonalizerStats& s) {
  j = {{"norm_U", s.norm_U},
       {"norm_Uinv", s.norm_Uinv},
       {"C_U", s.C_U},
       {"C_U_min_form", angle_constant_min_form(s.norm_U, s.norm_Uinv)},
       {"approximate", s.approximate}};
  if (s.near_isometry_beta) j["near_isometry_beta"] = *s.near_isometry_beta;
}

void to_json(json& j, const CodeFromFamily& c) {
  j = {{"d", c.d},
       {"epsilon", c.epsilon},
       {"eta", c.eta},
       {"eta_estimated", c.eta_estimated},
       {"field", to_string(c.code.field)},
       {"size", c.code.size()},
       {"coherence", c.coherence},
       {"alpha_bound", c.alpha_bound},
       {"residuals", c.residuals},
       {"coefficient_norms", c.coefficient_norms}};
}

void to_json(json& j, const Table& t) { j = {{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}}; }

void to_json(json& j, const Grid& g) {
  j = {{"half_width", g.half_width()}, {"points", g.size()}, {"spacing", g.spacing()}};
}

std::string format_report(const BoundReport& r) {
  std::ostringstream out;
  out << r.pipeline << ": N <= " << r.N.to_string();
  if (!r.tight_method.empty()) out << "  [" << r.tight_method << "]";
  out << '\n';
  for (const auto& e : r.envelopes) out << "  envelope " << e << '\n';
  for (const auto& nv : r.inputs) out << "  " << nv.name << " = " << num(nv.value) << '\n';
  for (const auto& nv : r.intermediates) out << "  " << nv.name << " = " << num(nv.value) << '\n';
  if (r.closed_form) out << "  closed form = " << num(*r.closed_form) << '\n';
  if (r.closed_form_log10) out << "  closed form log10 = " << num(*r.closed_form_log10) << '\n';
  for (const auto& t : r.trace) out << "  | " << t << '\n';
  for (const auto& a : r.assertions) {
    out << "  [" << (a.holds ? "ok" : "FAILED") << "] " << a.name;
    if (!a.detail.empty()) out << "  (" << a.detail << ")";
    out << '\n';
  }
  for (const auto& rel : r.related) {
    std::istringstream nested(format_report(rel));
    std::string line;
    while (std::getline(nested, line)) out << "    " << line << '\n';
  }
  return out.str();
}

SampledFunction read_sampled_function(const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".json") {
    std::ifstream in = open_in(path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(path.string() + ": " + e.what());
    }
    if (j.contains("functions")) throw PreconditionError(path.string() + ": holds a family, not one function");
    const Grid g = grid_from_json(j.value("grid", json::object()), path.string());
    return SampledFunction(g, values_from_json(j, g.size(), path.string()));
  }
  const auto rows = read_numeric_csv(path);
  if (rows.front().size() != 2 && rows.front().size() != 3) {
    throw PreconditionError(path.string() + ": expected columns t,re[,im]");
  }
  const Grid g = grid_from_abscissae(rows, path.string());
  std::vector<complex> v(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) v[k] = {rows[k][1], rows[k].size() == 3 ? rows[k][2] : 0.0};
  return SampledFunction(g, std::move(v));
}

void write_sampled_function(const std::filesystem::path& path, const SampledFunction& f) {
  std::ofstream out = open_out(path);
  if (lower_extension(path) == ".json") {
    json j = values_to_json(f);
    j["grid"] = f.grid();
    out << j.dump(1) << '\n';
    return;
  }
  out << "t,re,im\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out << f.grid().point(k) << ',' << f[k].real() << ',' << f[k].imag() << '\n';
  }
}

std::vector<SampledFunction> read_family(const std::filesystem::path& path) {
  std::vector<SampledFunction> family;
  if (lower_extension(path) == ".json") {
    std::ifstream in = open_in(path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(path.string() + ": " + e.what());
    }
    const Grid g = grid_from_json(j.value("grid", json::object()), path.string());
    if (!j.contains("functions")) {
      family.emplace_back(g, values_from_json(j, g.size(), path.string()));
      return family;
    }
    for (const auto& f : j.at("functions")) family.emplace_back(g, values_from_json(f, g.size(), path.string()));
  } else {
    const auto rows = read_numeric_csv(path);
    const std::size_t cols = rows.front().size();
    if (cols < 3 || (cols - 1) % 2 != 0) throw PreconditionError(path.string() + ": expected t,re_0,im_0,...");
    const Grid g = grid_from_abscissae(rows, path.string());
    for (std::size_t m = 0; m < (cols - 1) / 2; ++m) {
      std::vector<complex> v(rows.size());
      for (std::size_t k = 0; k < rows.size(); ++k) v[k] = {rows[k][1 + 2 * m], rows[k][2 + 2 * m]};
      family.emplace_back(g, std::move(v));
    }
  }
  if (family.empty()) throw PreconditionError(path.string() + ": empty family");
  return family;
}

void write_family(const std::filesystem::path& path, std::span<const SampledFunction> family) {
  if (family.empty()) throw PreconditionError("write_family: empty family");
  for (const auto& f : family) require_same_grid(family.front(), f);
  std::ofstream out = open_out(path);
  const Grid& g = family.front().grid();
  if (lower_extension(path) == ".json") {
    json fs = json::array();
    for (const auto& f : family) fs.push_back(values_to_json(f));
    out << json{{"grid", g}, {"functions", fs}}.dump(1) << '\n';
    return;
  }
  out << 't';
  for (std::size_t m = 0; m < family.size(); ++m) out << ",re_" << m << ",im_" << m;
  out << '\n';
  for (std::size_t k = 0; k < g.size(); ++k) {
    out << g.point(k);
    for (const auto& f : family) out << ',' << f[k].real() << ',' << f[k].imag();
    out << '\n';
  }
}

json pswf_to_json(const PswfBasis& basis, bool include_samples) {
  json j = {{"T", basis.T},
            {"Omega", basis.Omega},
            {"bandwidth_c", basis.bandwidth()},
            {"d_max", basis.d_max()},
            {"landau_pollak_d", landau_pollak_dimension(basis.T, basis.Omega)},
            {"lambdas", basis.lambdas},
            {"grid", basis.grid}};
  if (include_samples) {
    json fs = json::array();
    for (const auto& f : basis.functions) fs.push_back(values_to_json(f));
    j["functions"] = fs;
  }
  return j;
}

}  // namespace orthobound
