#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slnet/generator.hpp"

namespace slnet {

/// A seeded family of generated instances. Row i uses seed + i for both the
/// generator and the solver.
struct BenchConfig {
  std::string kind = "slst";  // slst | ndbd | spanner
  std::size_t count = 0;
  GraphShape shape;
  double eps = 0.25;
  int level = 2;
  std::size_t terminals = 3;      // slst
  std::size_t k = 0;              // slst, 0 = all terminals
  Rational slack{3, 2};           // slst: bound = ⌊slack·ℓ̄(r,t)⌋
  Length bound = 0;               // ndbd L
  Rational alpha{3, 2};           // spanner
  bool timings = false;           // fill runtime_ms (breaks byte reproducibility)
  std::size_t workers = 0;        // 0: worker_count()
};

/// JSON object with the field names above; `n`, `m`, `max_cost`,
/// `max_length` and `seed` sit at the top level, rationals are "p/q" strings.
BenchConfig parse_bench_config(std::string_view json);

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::optional<Cost> approx_cost;
  std::optional<Cost> oracle_cost;  // empty when above the oracle's cap
  std::optional<double> ratio;
  std::optional<double> violation;  // worst violation factor; empty if ∞
  std::optional<double> bound;      // ratio bound (slst) or admissible violation
  std::optional<double> runtime_ms;
  std::string error;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Header n,m,seed,approx_cost,oracle_cost,ratio,violation,bound,runtime_ms,error
/// then one LF-terminated line per row; missing values are empty fields.
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const BenchConfig& config, const std::vector<BenchRow>& rows);

}  // namespace slnet
