#include "entdet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "entdet/errors.hpp"

namespace entdet {

namespace {

std::string sig(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

const std::vector<std::string>& family_parameters(const std::string& family) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"isotropic", {"f"}},
      {"toth", {"q"}},
      {"garg", {"a"}},
      {"rudolph", {"s", "t"}},
      {"filtered", {"b", "c", "d"}},
      {"belldiag", {"p1", "p2", "p3", "p4"}},
  };
  const auto it = table.find(family);
  if (it == table.end()) throw std::invalid_argument("unknown family '" + family + "'");
  return it->second;
}

DensityMatrix make_family_state(const std::string& family,
                                const std::map<std::string, double>& params) {
  const auto& names = family_parameters(family);
  if (params.size() != names.size()) {
    std::ostringstream msg;
    msg << "family '" << family << "' takes " << names.size() << " parameter(s), got "
        << params.size();
    throw std::invalid_argument(msg.str());
  }
  auto get = [&](const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("family '" + family + "' missing parameter '" + name + "'");
    return it->second;
  };
  if (family == "isotropic") return isotropic(get("f"));
  if (family == "toth") return toth_family(get("q"));
  if (family == "garg") return garg_family(get("a"));
  if (family == "rudolph") return rudolph_family(get("s"), get("t"));
  if (family == "filtered") return filtered_family(get("b"), get("c"), get("d"));
  return bell_diagonal({get("p1"), get("p2"), get("p3"), get("p4")});
}

std::vector<std::string> parse_criteria(const std::string& list, BipartiteDims dims) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& id : all_criterion_ids())
        if (criterion_applicable(id, dims)) out.push_back(id);
      continue;
    }
    const auto& known = all_criterion_ids();
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw std::invalid_argument("unknown criterion id '" + item + "'");
    if (!criterion_applicable(item, dims)) {
      std::ostringstream msg;
      msg << "criterion '" << item << "' does not apply to " << dims.m << "x" << dims.n
          << " states";
      throw ValidationError(msg.str());
    }
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty criteria list");
  return out;
}

std::vector<CriterionResult> run_check(const DensityMatrix& rho,
                                       const std::vector<std::string>& criteria,
                                       const CriterionOptions& opt) {
  std::vector<CriterionResult> results;
  results.reserve(criteria.size());
  for (const auto& id : criteria) results.push_back(evaluate_criterion(rho, id, opt));
  return results;
}

namespace {

std::vector<double> make_grid(double from, double to, int steps) {
  std::vector<double> grid;
  if (steps <= 0) return grid;
  grid.reserve(static_cast<size_t>(steps));
  if (steps == 1) {
    grid.push_back(from);
    return grid;
  }
  for (int i = 0; i < steps; ++i)
    grid.push_back(from + (to - from) * static_cast<double>(i) / (steps - 1));
  return grid;
}

double margin_at(const FamilySpec& spec, const std::string& criterion, double x,
                 const CriterionOptions& opt) {
  auto params = spec.fixed;
  params[spec.sweep_param] = x;
  const DensityMatrix rho = make_family_state(spec.family, params);
  return detect_margin(evaluate_criterion(rho, criterion, opt), opt.tol);
}

}  // namespace

double find_boundary(const FamilySpec& spec, const std::string& criterion, double lo, double hi,
                     double param_tol, const CriterionOptions& opt) {
  if (!(param_tol > 0.0)) throw std::invalid_argument("find_boundary: tol must be positive");
  if (!(lo < hi)) throw std::invalid_argument("find_boundary: need lo < hi");
  const bool detect_lo = margin_at(spec, criterion, lo, opt) > 0.0;
  const bool detect_hi = margin_at(spec, criterion, hi, opt) > 0.0;
  if (detect_lo == detect_hi) {
    std::ostringstream msg;
    msg << "find_boundary: criterion '" << criterion << "' has the same verdict at " << lo
        << " and " << hi;
    throw std::invalid_argument(msg.str());
  }
  for (int iter = 0; iter < 200 && (hi - lo) > param_tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if ((margin_at(spec, criterion, mid, opt) > 0.0) == detect_hi)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

SweepReport run_sweep(const FamilySpec& spec, const std::vector<std::string>& criteria,
                      const CriterionOptions& opt) {
  const auto& names = family_parameters(spec.family);
  if (std::find(names.begin(), names.end(), spec.sweep_param) == names.end())
    throw std::invalid_argument("family '" + spec.family + "' has no parameter '" +
                                spec.sweep_param + "'");
  if (criteria.empty()) throw std::invalid_argument("run_sweep: empty criteria list");

  SweepReport report;
  report.spec = spec;
  report.criteria = criteria;
  report.grid = make_grid(spec.from, spec.to, spec.steps);

  for (double x : report.grid) {
    auto params = spec.fixed;
    params[spec.sweep_param] = x;
    const DensityMatrix rho = make_family_state(spec.family, params);
    for (const auto& id : criteria) {
      const CriterionResult res = evaluate_criterion(rho, id, opt);
      report.rows.push_back(SweepRow{x, id, res.value, res.detects});
    }
  }

  // Refine each grid-level verdict flip down to a point estimate.
  const size_t nc = criteria.size();
  for (size_t c = 0; c < nc; ++c) {
    std::vector<double> flips;
    for (size_t i = 0; i + 1 < report.grid.size(); ++i) {
      const bool a = report.rows[i * nc + c].detects;
      const bool b = report.rows[(i + 1) * nc + c].detects;
      if (a != b) {
        const double lo = report.grid[i];
        const double hi = report.grid[i + 1];
        const double tol = std::max(1e-12, (hi - lo) * 1e-9);
        flips.push_back(find_boundary(spec, criteria[c], lo, hi, tol, opt));
      }
    }
    report.boundaries[criteria[c]] = std::move(flips);
  }
  return report;
}

SurveyReport run_survey(BipartiteDims dims, int samples, int rank, std::uint64_t seed,
                        const std::vector<std::string>& criteria, const CriterionOptions& opt,
                        const std::string& sampler, int terms) {
  if (samples < 1) throw std::invalid_argument("run_survey: samples must be >= 1");
  if (sampler != "density" && sampler != "separable")
    throw std::invalid_argument("run_survey: sampler must be 'density' or 'separable'");
  if (criteria.empty()) throw std::invalid_argument("run_survey: empty criteria list");

  SurveyReport report;
  report.dims = dims;
  report.samples = samples;
  report.rank = rank;
  report.terms = terms > 0 ? terms : dims.total();
  report.seed = seed;
  report.sampler = sampler;
  report.criteria = criteria;
  for (const auto& id : criteria) {
    report.counts[id] = 0;
    for (const auto& other : criteria)
      if (other != id) report.cross[id][other] = 0;
  }

  std::vector<bool> det(criteria.size());
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(i);
    const DensityMatrix rho = sampler == "separable"
                                  ? random_separable(dims, report.terms, sample_seed)
                                  : random_density(dims, rank, sample_seed);
    for (size_t c = 0; c < criteria.size(); ++c) {
      det[c] = evaluate_criterion(rho, criteria[c], opt).detects;
      if (det[c]) ++report.counts[criteria[c]];
    }
    for (size_t a = 0; a < criteria.size(); ++a)
      for (size_t b = 0; b < criteria.size(); ++b)
        if (a != b && det[a] && !det[b]) ++report.cross[criteria[a]][criteria[b]];
  }
  return report;
}

void emit_check_csv(const std::vector<CriterionResult>& results, std::ostream& out) {
  out << "criterion,value,detects\n";
  for (const auto& r : results)
    out << r.id << "," << sig(r.value, 10) << "," << bool_str(r.detects) << "\n";
}

void emit_check_json(const std::vector<CriterionResult>& results, std::ostream& out) {
  out << "[\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << "  {\"id\": \"" << json_escape(r.id) << "\", \"value\": " << sig(r.value, 17)
        << ", \"detects\": " << bool_str(r.detects) << ", \"details\": {";
    size_t j = 0;
    for (const auto& [key, val] : r.details) {
      out << "\"" << json_escape(key) << "\": " << sig(val, 17);
      if (++j < r.details.size()) out << ", ";
    }
    out << "}}" << (i + 1 < results.size() ? "," : "") << "\n";
  }
  out << "]\n";
}

void emit_check_table(const std::vector<CriterionResult>& results, std::ostream& out) {
  out << std::left << std::setw(10) << "criterion" << std::setw(16) << "value"
      << "detects\n";
  for (const auto& r : results)
    out << std::left << std::setw(10) << r.id << std::setw(16) << sig(r.value, 6)
        << bool_str(r.detects) << "\n";
}

void emit_sweep_csv(const SweepReport& report, std::ostream& out) {
  out << "param,criterion,value,detects\n";
  for (const auto& row : report.rows)
    out << sig(row.param, 10) << "," << row.criterion << "," << sig(row.value, 10) << ","
        << bool_str(row.detects) << "\n";
}

void emit_sweep_json(const SweepReport& report, std::ostream& out) {
  out << "{\n  \"family\": \"" << json_escape(report.spec.family) << "\",\n  \"param\": \""
      << json_escape(report.spec.sweep_param) << "\",\n  \"from\": " << sig(report.spec.from, 17)
      << ",\n  \"to\": " << sig(report.spec.to, 17) << ",\n  \"steps\": " << report.spec.steps
      << ",\n  \"fixed\": {";
  size_t i = 0;
  for (const auto& [key, val] : report.spec.fixed) {
    out << "\"" << json_escape(key) << "\": " << sig(val, 17);
    if (++i < report.spec.fixed.size()) out << ", ";
  }
  out << "},\n  \"rows\": [\n";
  for (size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    out << "    {\"param\": " << sig(row.param, 17) << ", \"criterion\": \""
        << json_escape(row.criterion) << "\", \"value\": " << sig(row.value, 17)
        << ", \"detects\": " << bool_str(row.detects) << "}"
        << (r + 1 < report.rows.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"boundaries\": {";
  i = 0;
  for (const auto& [id, flips] : report.boundaries) {
    out << "\"" << json_escape(id) << "\": [";
    for (size_t f = 0; f < flips.size(); ++f)
      out << sig(flips[f], 17) << (f + 1 < flips.size() ? ", " : "");
    out << "]";
    if (++i < report.boundaries.size()) out << ", ";
  }
  out << "}\n}\n";
}

void emit_sweep_table(const SweepReport& report, std::ostream& out) {
  out << std::left << std::setw(16) << report.spec.sweep_param;
  for (const auto& id : report.criteria) out << std::setw(16) << id;
  out << "\n";
  const size_t nc = report.criteria.size();
  for (size_t i = 0; i < report.grid.size(); ++i) {
    out << std::left << std::setw(16) << sig(report.grid[i], 8);
    for (size_t c = 0; c < nc; ++c) {
      const auto& row = report.rows[i * nc + c];
      std::string cell = sig(row.value, 6);
      if (row.detects) cell += "*";
      out << std::setw(16) << cell;
    }
    out << "\n";
  }
  for (const auto& [id, flips] : report.boundaries) {
    if (flips.empty()) continue;
    out << "# " << id << " verdict flips at:";
    for (double f : flips) out << " " << sig(f, 10);
    out << "\n";
  }
}

void emit_survey_json(const SurveyReport& report, std::ostream& out) {
  out << "{\n  \"dims\": \"" << report.dims.m << "x" << report.dims.n
      << "\",\n  \"samples\": " << report.samples << ",\n  \"sampler\": \"" << report.sampler
      << "\",\n  \"rank\": " << report.rank << ",\n  \"terms\": " << report.terms
      << ",\n  \"seed\": " << report.seed << ",\n  \"counts\": {";
  size_t i = 0;
  for (const auto& [id, count] : report.counts) {
    out << "\"" << json_escape(id) << "\": " << count;
    if (++i < report.counts.size()) out << ", ";
  }
  out << "},\n  \"detected_by_first_not_second\": {";
  i = 0;
  for (const auto& [id, row] : report.cross) {
    out << "\"" << json_escape(id) << "\": {";
    size_t j = 0;
    for (const auto& [other, count] : row) {
      out << "\"" << json_escape(other) << "\": " << count;
      if (++j < row.size()) out << ", ";
    }
    out << "}";
    if (++i < report.cross.size()) out << ", ";
  }
  out << "}\n}\n";
}

void emit_survey_table(const SurveyReport& report, std::ostream& out) {
  out << "survey " << report.dims.m << "x" << report.dims.n << " samples=" << report.samples
      << " sampler=" << report.sampler
      << (report.sampler == "separable" ? " terms=" : " rank=")
      << (report.sampler == "separable" ? report.terms : report.rank) << " seed=" << report.seed
      << "\n\n";
  out << std::left << std::setw(10) << "criterion" << "detections\n";
  for (const auto& id : report.criteria)
    out << std::left << std::setw(10) << id << report.counts.at(id) << "\n";
  out << "\ndetected-by-row-but-not-column\n";
  out << std::left << std::setw(10) << "";
  for (const auto& id : report.criteria) out << std::setw(10) << id;
  out << "\n";
  for (const auto& a : report.criteria) {
    out << std::left << std::setw(10) << a;
    for (const auto& b : report.criteria) {
      if (a == b)
        out << std::setw(10) << "-";
      else
        out << std::setw(10) << report.cross.at(a).at(b);
    }
    out << "\n";
  }
}

void emit_rearranged_json(const RearrangedMatrix& mat, std::ostream& out) {
  out << "{\n  \"origin\": \"" << map_kind_name(mat.origin) << "\",\n  \"m\": " << mat.dims.m
      << ",\n  \"n\": " << mat.dims.n << ",\n  \"rows\": " << mat.mat.rows()
      << ",\n  \"cols\": " << mat.mat.cols() << ",\n  \"matrix\": [\n";
  for (Eigen::Index i = 0; i < mat.mat.rows(); ++i) {
    out << "    [";
    for (Eigen::Index j = 0; j < mat.mat.cols(); ++j) {
      out << "[" << sig(mat.mat(i, j).real(), 17) << ", " << sig(mat.mat(i, j).imag(), 17) << "]";
      if (j + 1 < mat.mat.cols()) out << ", ";
    }
    out << "]" << (i + 1 < mat.mat.rows() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
}

}  // namespace entdet
