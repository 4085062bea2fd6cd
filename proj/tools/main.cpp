// entdet: command-line checks, sweeps, boundary searches and surveys for
// bipartite entanglement criteria.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entdet/criteria.hpp"
#include "entdet/errors.hpp"
#include "entdet/maps.hpp"
#include "entdet/states.hpp"
#include "entdet/sweep.hpp"

namespace {

using namespace entdet;

std::map<std::string, double> parse_assignments(const std::vector<std::string>& kvs,
                                                const char* flag) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument(std::string(flag) + " expects name=value, got '" + kv + "'");
    const std::string name = kv.substr(0, eq);
    try {
      out[name] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) + ": cannot parse value in '" + kv + "'");
    }
  }
  return out;
}

BipartiteDims parse_dims(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size())
    throw std::invalid_argument("--dims expects <m>x<n>, got '" + text + "'");
  try {
    return BipartiteDims{std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--dims expects <m>x<n>, got '" + text + "'");
  }
}

BipartiteDims family_dims(const std::string& family) {
  if (family == "toth") return {4, 4};
  if (family == "garg") return {3, 3};
  family_parameters(family);  // validates the name
  return {2, 2};
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw ValidationError("cannot open '" + path + "' for writing");
    stream = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite entanglement detection via moment-based separability criteria"};
  app.require_subcommand(1);

  CriterionOptions opt;
  std::string hankel_mode = "default";
  app.add_option("--rank-tol", opt.tol.rank_rel_tol,
                 "relative singular-value threshold for numerical rank")
      ->capture_default_str();
  app.add_option("--verdict-tol", opt.tol.verdict_tol, "detection threshold on criterion values")
      ->capture_default_str();
  app.add_option("--hankel-mode", hankel_mode, "Hankel sequence convention: default|raw")
      ->check(CLI::IsMember({"default", "raw"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "evaluate criteria on a state file");
  std::string check_state, check_criteria = "all", check_format = "table";
  check->add_option("--state", check_state, "state file (JSON)")->required();
  check->add_option("--criteria", check_criteria, "comma-separated criterion ids or 'all'");
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate criteria along a family parameter grid");
  FamilySpec spec;
  std::string sweep_criteria, sweep_out, sweep_format = "csv";
  std::vector<std::string> sweep_fix;
  sweep->add_option("--family", spec.family, "family id")->required();
  sweep->add_option("--param", spec.sweep_param, "swept parameter name")->required();
  sweep->add_option("--from", spec.from, "grid start (inclusive)")->required();
  sweep->add_option("--to", spec.to, "grid end (inclusive)")->required();
  sweep->add_option("--steps", spec.steps, "number of grid points")->required();
  sweep->add_option("--criteria", sweep_criteria, "comma-separated criterion ids or 'all'")
      ->required();
  sweep->add_option("--fix", sweep_fix, "fixed family parameter, name=value (repeatable)");
  sweep->add_option("--out", sweep_out, "output path (default: stdout)");
  sweep->add_option("--format", sweep_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // boundary
  auto* boundary = app.add_subcommand("boundary", "bisect a detection boundary along a family");
  FamilySpec bspec;
  std::string boundary_criterion;
  double blo = 0.0, bhi = 0.0, btol = 1e-6;
  std::vector<std::string> boundary_fix;
  boundary->add_option("--family", bspec.family, "family id")->required();
  boundary->add_option("--param", bspec.sweep_param, "parameter to bisect")->required();
  boundary->add_option("--criterion", boundary_criterion, "criterion id")->required();
  boundary->add_option("--lo", blo, "bracket low end")->required();
  boundary->add_option("--hi", bhi, "bracket high end")->required();
  boundary->add_option("--tol", btol, "parameter tolerance")->capture_default_str();
  boundary->add_option("--fix", boundary_fix, "fixed family parameter, name=value (repeatable)");

  // survey
  auto* survey = app.add_subcommand("survey", "detection statistics over seeded random states");
  std::string survey_dims, survey_criteria = "all", survey_sampler = "density",
              survey_format = "table";
  int survey_samples = 0, survey_rank = 0, survey_terms = 0;
  std::uint64_t survey_seed = 0;
  survey->add_option("--dims", survey_dims, "bipartite dimensions <m>x<n>")->required();
  survey->add_option("--samples", survey_samples, "number of random states")->required();
  survey->add_option("--rank", survey_rank, "rank of sampled states (density sampler)");
  survey->add_option("--seed", survey_seed, "PRNG seed (sample i uses seed+i)")->required();
  survey->add_option("--criteria", survey_criteria, "comma-separated criterion ids or 'all'");
  survey->add_option("--sampler", survey_sampler, "state sampler")
      ->check(CLI::IsMember({"density", "separable"}));
  survey->add_option("--terms", survey_terms, "product terms for the separable sampler");
  survey->add_option("--format", survey_format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  // dump
  auto* dump = app.add_subcommand("dump", "dump a rearranged matrix (debug)");
  std::string dump_state, dump_map = "realign", dump_subsystem = "B";
  dump->add_option("--state", dump_state, "state file (JSON)")->required();
  dump->add_option("--map", dump_map, "rearrangement to apply")
      ->check(CLI::IsMember({"realign", "pt"}));
  dump->add_option("--subsystem", dump_subsystem, "partial-transpose subsystem")
      ->check(CLI::IsMember({"A", "B"}));

  // gen
  auto* gen = app.add_subcommand("gen", "write a family state to a state file");
  std::string gen_family, gen_out;
  std::vector<std::string> gen_set;
  gen->add_option("--family", gen_family, "family id")->required();
  gen->add_option("--set", gen_set, "family parameter, name=value (repeatable)");
  gen->add_option("--out", gen_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    opt.hankel_mode = hankel_mode == "raw" ? HankelMode::Raw : HankelMode::Normalized;

    if (*check) {
      const DensityMatrix rho = load_state(check_state, opt.tol);
      const auto ids = parse_criteria(check_criteria, rho.dims);
      const auto results = run_check(rho, ids, opt);
      if (check_format == "json")
        emit_check_json(results, std::cout);
      else if (check_format == "csv")
        emit_check_csv(results, std::cout);
      else
        emit_check_table(results, std::cout);
    } else if (*sweep) {
      spec.fixed = parse_assignments(sweep_fix, "--fix");
      const auto ids = parse_criteria(sweep_criteria, family_dims(spec.family));
      const SweepReport report = run_sweep(spec, ids, opt);
      OutputTarget target;
      target.open(sweep_out);
      if (sweep_format == "json")
        emit_sweep_json(report, *target.stream);
      else if (sweep_format == "table")
        emit_sweep_table(report, *target.stream);
      else
        emit_sweep_csv(report, *target.stream);
    } else if (*boundary) {
      bspec.fixed = parse_assignments(boundary_fix, "--fix");
      const auto ids = parse_criteria(boundary_criterion, family_dims(bspec.family));
      if (ids.size() != 1) throw std::invalid_argument("boundary takes exactly one criterion");
      const double at = find_boundary(bspec, ids.front(), blo, bhi, btol, opt);
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.17g", at);
      std::cout << buf << "\n";
    } else if (*survey) {
      const BipartiteDims dims = parse_dims(survey_dims);
      const auto ids = parse_criteria(survey_criteria, dims);
      if (survey_sampler == "density" && survey_rank < 1)
        throw std::invalid_argument("survey with the density sampler requires --rank >= 1");
      const SurveyReport report = run_survey(dims, survey_samples, survey_rank, survey_seed, ids,
                                             opt, survey_sampler, survey_terms);
      if (survey_format == "json")
        emit_survey_json(report, std::cout);
      else
        emit_survey_table(report, std::cout);
    } else if (*dump) {
      const DensityMatrix rho = load_state(dump_state, opt.tol);
      if (dump_map == "realign") {
        emit_rearranged_json(realign(rho), std::cout);
      } else {
        const Subsystem sub = dump_subsystem == "A" ? Subsystem::A : Subsystem::B;
        emit_rearranged_json(partial_transpose(rho, sub), std::cout);
      }
    } else if (*gen) {
      const auto params = parse_assignments(gen_set, "--set");
      const DensityMatrix rho = make_family_state(gen_family, params);
      save_state(rho, gen_out);
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
