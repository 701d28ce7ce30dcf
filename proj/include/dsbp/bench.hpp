#pragma once

// Benchmark runs: lower bound, exact optimum where the oracle allows it, and
// the approximation scheme for each eps, with every packing verified.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsbp/milp_solver.hpp"
#include "dsbp/oracle.hpp"

namespace dsbp {

struct NamedInstance {
  std::string name;
  Instance instance;
};

struct BenchRow {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::int64_t eps_denominator = 0;
  Size lower_bound;
  std::optional<Size> exact;
  std::optional<Size> eptas;
  std::optional<Rational> ratio;  ///< eptas / exact
  bool verified = false;
  double exact_seconds = 0;
  double eptas_seconds = 0;
  std::string error;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

struct BenchOptions {
  std::vector<std::int64_t> eps_denominators{2, 3, 4};
  SolveOptions solver;
  OracleOptions oracle;
};

BenchReport bench(const std::vector<NamedInstance>& instances, const BenchOptions& options = {});

}  // namespace dsbp
