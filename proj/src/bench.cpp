#include "dsbp/bench.hpp"

#include <chrono>
#include <ostream>

#include "dsbp/errors.hpp"
#include "dsbp/pipeline.hpp"

namespace dsbp {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BenchReport bench(const std::vector<NamedInstance>& instances, const BenchOptions& options) {
  BenchReport report;
  for (const auto& named : instances) {
    const Instance& inst = named.instance;
    std::optional<Size> exact;
    double exact_seconds = 0;
    std::string exact_error;
    try {
      const auto start = std::chrono::steady_clock::now();
      if (auto opt = exact_opt(inst, options.oracle)) exact = opt->value;
      exact_seconds = seconds_since(start);
    } catch (const ResourceLimit&) {
      // The oracle only runs where it is allowed to.
    } catch (const std::exception& e) {
      exact_error = std::string("oracle: ") + e.what();
    }

    for (std::int64_t denominator : options.eps_denominators) {
      BenchRow row;
      row.name = named.name;
      row.n = inst.size();
      row.m = inst.bins();
      row.k = inst.k();
      row.eps_denominator = denominator;
      row.lower_bound = lower_bound(inst);
      row.exact = exact;
      row.exact_seconds = exact_seconds;
      row.error = exact_error;
      try {
        const auto start = std::chrono::steady_clock::now();
        EptasResult result = eptas_solve(inst, Epsilon(denominator), options.solver);
        row.eptas_seconds = seconds_since(start);
        row.eptas = result.value;
        const auto check = verify_packing(inst, result.packing);
        row.verified = check.feasible && check.max_load == result.value;
        if (exact && *exact > 0) row.ratio = result.value / *exact;
        if (exact && *exact == 0 && result.value == 0) row.ratio = Rational(1);
      } catch (const std::exception& e) {
        row.error += (row.error.empty() ? "" : "; ") + std::string(e.what());
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void BenchReport::write_csv(std::ostream& out) const {
  out << "name,n,m,k,eps,lower_bound,exact,eptas,ratio,ratio_decimal,verified,exact_seconds,eptas_seconds,error\n";
  for (const auto& r : rows) {
    out << csv_field(r.name) << ',' << r.n << ',' << r.m << ',' << r.k << ",1/" << r.eps_denominator << ','
        << to_string(r.lower_bound) << ',' << (r.exact ? to_string(*r.exact) : "") << ','
        << (r.eptas ? to_string(*r.eptas) : "") << ',' << (r.ratio ? to_string(*r.ratio) : "") << ','
        << (r.ratio ? to_decimal(*r.ratio) : "") << ',' << (r.verified ? "yes" : "no") << ','
        << r.exact_seconds << ',' << r.eptas_seconds << ',' << csv_field(r.error) << '\n';
  }
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["eps"] = "1/" + std::to_string(r.eps_denominator);
    j["lower_bound"] = to_string(r.lower_bound);
    j["exact"] = r.exact ? nlohmann::json(to_string(*r.exact)) : nlohmann::json(nullptr);
    j["eptas"] = r.eptas ? nlohmann::json(to_string(*r.eptas)) : nlohmann::json(nullptr);
    j["ratio"] = r.ratio ? nlohmann::json(to_string(*r.ratio)) : nlohmann::json(nullptr);
    j["verified"] = r.verified;
    j["exact_seconds"] = r.exact_seconds;
    j["eptas_seconds"] = r.eptas_seconds;
    if (!r.error.empty()) j["error"] = r.error;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace dsbp
