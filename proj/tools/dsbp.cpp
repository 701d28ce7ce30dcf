// dsbp: command-line front end.
//
// Exit codes: 0 success, 1 infeasible instance (or a packing that fails
// verification), 2 resource cap reached, 3 I/O or format error,
// 4 internal error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dsbp/bench.hpp"
#include "dsbp/errors.hpp"
#include "dsbp/generator.hpp"
#include "dsbp/guess.hpp"
#include "dsbp/json_io.hpp"
#include "dsbp/milp_model.hpp"
#include "dsbp/oracle.hpp"
#include "dsbp/pipeline.hpp"

namespace {

enum Exit { kOk = 0, kInfeasible = 1, kResource = 2, kFormat = 3, kInternal = 4 };

void print_value(const char* label, const dsbp::Size& value) {
  std::cout << label << ' ' << dsbp::to_string(value) << " (" << dsbp::to_decimal(value) << ")\n";
}

void warn_if_loose(std::int64_t denominator) {
  if (denominator < 10) {
    std::cerr << "warning: eps = 1/" << denominator
              << " exceeds 1/10; the pattern and configuration count bounds are not claimed here\n";
  }
}

int run_solve(const std::string& input, std::int64_t denominator, const std::string& out,
              const std::string& trace, const dsbp::SolveOptions& options) {
  const dsbp::Epsilon eps(denominator);
  warn_if_loose(denominator);
  const dsbp::Instance inst = dsbp::load_instance(input);
  const auto result = dsbp::eptas_solve(inst, eps, options);
  print_value("value", result.value);
  print_value("lower_bound", dsbp::lower_bound(inst));
  if (const auto* g = result.trace.selected()) {
    std::cout << "guess (1+eps)^" << g->exponent << " = " << dsbp::to_string(g->guess) << " after "
              << result.trace.guesses.size() << " guess(es)\n";
  }
  if (!out.empty()) dsbp::write_json_file(out, dsbp::packing_to_json(result.packing));
  if (!trace.empty()) dsbp::write_json_file(trace, result.trace.to_json());
  return kOk;
}

int run_model(const std::string& input, std::int64_t denominator, std::size_t guess_index,
              const std::string& out) {
  const dsbp::Epsilon eps(denominator);
  const dsbp::Instance inst = dsbp::load_instance(input);
  if (inst.total_size() == 0) throw dsbp::PreconditionError("all items have size zero; there is no model");
  const auto guesses = dsbp::guess_values(inst, eps);
  if (guess_index >= guesses.size()) {
    throw dsbp::PreconditionError("guess index " + std::to_string(guess_index) + " out of range, have " +
                                  std::to_string(guesses.size()));
  }
  const auto& g = guesses[guess_index];
  const auto ri = dsbp::round_instance(dsbp::scale_instance(inst, g.value), eps);
  const auto model = dsbp::build_model(ri, dsbp::classify(ri));
  std::cerr << "guess (1+eps)^" << g.exponent << " = " << dsbp::to_string(g.value) << ", "
            << model.variable_count() << " variables, " << model.constraint_count() << " rows\n";
  if (out.empty()) {
    dsbp::write_model(std::cout, model);
  } else {
    std::ofstream file(out);
    if (!file) throw dsbp::FormatError("cannot write " + out);
    dsbp::write_model(file, model);
  }
  return kOk;
}

int run_exact(const std::string& input, std::size_t max_cells, const std::string& out) {
  const dsbp::Instance inst = dsbp::load_instance(input);
  dsbp::OracleOptions options;
  options.max_cells = max_cells;
  const auto best = dsbp::exact_opt(inst, options);
  if (!best) {
    std::cout << "infeasible: " << inst.size() << " items need more than " << inst.k() << " x "
              << inst.bins() << " slots\n";
    return kInfeasible;
  }
  print_value("optimum", best->value);
  std::cout << "supports solved " << best->supports << '\n';
  if (!out.empty()) dsbp::write_json_file(out, dsbp::packing_to_json(best->packing));
  return kOk;
}

int run_verify(const std::string& input, const std::string& packing) {
  const dsbp::Instance inst = dsbp::load_instance(input);
  const dsbp::Packing pack = dsbp::load_packing(packing);
  const auto report = dsbp::verify_packing(inst, pack);
  std::cout << (report.feasible ? "feasible" : "infeasible") << '\n';
  print_value("max_load", report.max_load);
  for (const auto& v : report.violations) std::cout << "  " << v << '\n';
  return report.feasible ? kOk : kInfeasible;
}

int run_gen(const dsbp::GenSpec& spec, const std::string& out) {
  const dsbp::Instance inst = dsbp::generate(spec);
  if (out.empty()) {
    std::cout << dsbp::instance_to_json(inst).dump(2) << '\n';
  } else {
    dsbp::write_json_file(out, dsbp::instance_to_json(inst));
  }
  return kOk;
}

int run_bench(const std::string& dir, const std::string& eps_list, const std::string& csv,
              const std::string& json, dsbp::BenchOptions options) {
  options.eps_denominators.clear();
  std::stringstream list(eps_list);
  for (std::string token; std::getline(list, token, ',');) {
    try {
      options.eps_denominators.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw dsbp::FormatError("bad eps denominator '" + token + "'");
    }
  }
  for (auto d : options.eps_denominators) {
    dsbp::Epsilon check(d);
    warn_if_loose(check.denominator());
  }

  if (!std::filesystem::is_directory(dir)) throw dsbp::FormatError("not a directory: " + dir);
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<dsbp::NamedInstance> instances;
  for (const auto& f : files) instances.push_back({f.filename().string(), dsbp::load_instance(f)});

  const auto report = dsbp::bench(instances, options);
  if (csv.empty()) {
    report.write_csv(std::cout);
  } else {
    std::ofstream file(csv);
    if (!file) throw dsbp::FormatError("cannot write " + csv);
    report.write_csv(file);
  }
  if (!json.empty()) dsbp::write_json_file(json, report.to_json());
  std::size_t failures = 0;
  for (const auto& row : report.rows) failures += row.verified ? 0 : 1;
  std::cerr << report.rows.size() << " runs, " << failures << " without a verified packing\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splittable bin packing with a cardinality bound: approximation scheme, exact oracle, tools"};
  app.require_subcommand(1);

  std::string input;
  std::string out;
  std::string trace;
  std::int64_t denominator = 4;
  std::string strategy = "decomposed";
  dsbp::SolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "Run the approximation scheme with eps = 1/E");
  solve->add_option("--eps", denominator, "E, the inverse of eps (integer >= 2)")->required();
  solve->add_option("--input", input, "instance JSON")->required();
  solve->add_option("--out", out, "write the packing as JSON");
  solve->add_option("--trace", trace, "write the per-guess trace as JSON");
  solve->add_option("--solver", strategy, "decomposed or lp-bnb")->capture_default_str();
  solve->add_option("--node-limit", solve_options.node_limit, "solver node limit per guess")->capture_default_str();

  std::size_t guess_index = 0;
  auto* model = app.add_subcommand("model", "Write the MILP of one guess in the text format of docs/model_format.md");
  model->add_option("--eps", denominator, "E, the inverse of eps (integer >= 2)")->required();
  model->add_option("--input", input, "instance JSON")->required();
  model->add_option("--guess", guess_index, "0-based index into the ascending guesses")->capture_default_str();
  model->add_option("--out", out, "output file (stdout when omitted)");

  std::size_t max_cells = 20;
  auto* exact = app.add_subcommand("exact", "Exact optimum by support enumeration (small instances)");
  exact->add_option("--input", input, "instance JSON")->required();
  exact->add_option("--out", out, "write the optimal packing as JSON");
  exact->add_option("--max-cells", max_cells, "refuse when n*m exceeds this")->capture_default_str();

  std::string packing;
  auto* verify = app.add_subcommand("verify", "Check a packing against an instance");
  verify->add_option("--input", input, "instance JSON")->required();
  verify->add_option("--packing", packing, "packing JSON")->required();

  dsbp::GenSpec spec;
  std::string dist = "uniform";
  std::string lo = "0";
  std::string hi = "1";
  std::string step = "1/4";
  std::string small_fraction = "1/2";
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--n", spec.n, "number of items")->required();
  gen->add_option("--m", spec.m, "number of bins")->required();
  gen->add_option("--k", spec.k, "parts per bin")->required();
  gen->add_option("--dist", dist, "uniform, bimodal or grid")->capture_default_str();
  gen->add_option("--seed", spec.seed, "64-bit seed")->capture_default_str();
  gen->add_option("--lo", lo, "smallest size")->capture_default_str();
  gen->add_option("--hi", hi, "largest size")->capture_default_str();
  gen->add_option("--step", step, "grid step")->capture_default_str();
  gen->add_option("--small-fraction", small_fraction, "bimodal share of small items")->capture_default_str();
  gen->add_option("--out", out, "output file (stdout when omitted)");

  std::string dir;
  std::string eps_list = "2,3,4";
  std::string csv;
  std::string json;
  dsbp::BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "Run the scheme and the oracle over a directory of instances");
  bench->add_option("--dir", dir, "directory of instance JSON files")->required();
  bench->add_option("--eps", eps_list, "comma-separated E values")->capture_default_str();
  bench->add_option("--csv", csv, "CSV report (stdout when omitted)");
  bench->add_option("--json", json, "JSON report");
  bench->add_option("--max-cells", bench_options.oracle.max_cells, "oracle cap on n*m")->capture_default_str();
  bench->add_option("--node-limit", bench_options.solver.node_limit, "solver node limit per guess")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFormat;
  }

  try {
    if (*solve) {
      solve_options.strategy = dsbp::parse_strategy(strategy);
      return run_solve(input, denominator, out, trace, solve_options);
    }
    if (*model) return run_model(input, denominator, guess_index, out);
    if (*exact) return run_exact(input, max_cells, out);
    if (*verify) return run_verify(input, packing);
    if (*gen) {
      spec.dist = dsbp::parse_distribution(dist);
      spec.lo = dsbp::parse_rational(lo);
      spec.hi = dsbp::parse_rational(hi);
      spec.step = dsbp::parse_rational(step);
      spec.small_fraction = dsbp::parse_rational(small_fraction);
      return run_gen(spec, out);
    }
    if (*bench) return run_bench(dir, eps_list, csv, json, bench_options);
  } catch (const dsbp::InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const dsbp::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const dsbp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const dsbp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  }
  return kOk;
}
