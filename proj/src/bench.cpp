#include "slnet/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>

#include "json.hpp"
#include "slnet/oracle.hpp"
#include "slnet/parallel.hpp"
#include "slnet/pipelines.hpp"
#include "slnet/slst.hpp"

namespace slnet {

namespace {

using Json = nlohmann::ordered_json;

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text), 1);
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

/// Shortest round-trip decimal; independent of the C locale.
std::string number(double x) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

template <typename T>
std::string field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) return number(*v);
  return std::to_string(*v);
}

std::optional<double> ratio_of(Cost approx, Cost exact) {
  if (exact == 0) return approx == 0 ? std::optional<double>(1.0) : std::nullopt;
  return static_cast<double>(approx) / static_cast<double>(exact);
}

BenchRow run_row(const BenchConfig& c, std::size_t index) {
  BenchRow row;
  GraphShape shape = c.shape;
  shape.seed = c.shape.seed + index;
  row.n = shape.n;
  row.m = shape.m;
  row.seed = shape.seed;
  SolveParams params;
  params.eps = c.eps;
  params.level = c.level;
  params.seed = shape.seed;
  params.workers = 1;
  const auto start = std::chrono::steady_clock::now();
  try {
    RunReport report;
    std::optional<Cost> oracle;
    if (c.kind == "slst") {
      const SlstInstance inst = generate_slst(shape, c.terminals, c.slack);
      const std::size_t k = c.k == 0 ? inst.bounds.size() : c.k;
      report = solve_slst(inst, params, k);
      if (c.level >= 2) row.bound = ratio_bound(c.level, static_cast<double>(k));
      try {
        if (auto t = exact_dslst(inst, k)) oracle = t->cost;
      } catch (const CapExceeded&) {
      }
    } else if (c.kind == "ndbd") {
      const NdbdInstance inst = generate_ndbd(shape, c.bound);
      report = solve_ndbd(inst, params);
      row.bound = guaranteed_factor(inst, params);
      try {
        if (auto h = exact_ndbd(inst)) oracle = h->cost;
      } catch (const CapExceeded&) {
      }
    } else if (c.kind == "spanner") {
      const SpannerInstance inst = generate_spanner(shape, c.alpha);
      report = solve_spanner(inst, params);
      row.bound = guaranteed_factor(inst, params);
      try {
        oracle = exact_spanner(inst).cost;
      } catch (const CapExceeded&) {
      }
    } else {
      throw Error("unknown bench kind '" + c.kind + "'");
    }
    row.approx_cost = report.cost;
    row.oracle_cost = oracle;
    if (oracle) row.ratio = ratio_of(report.cost, *oracle);
    row.violation = report.verification.worst_violation;
    if (!report.verification.ok) row.error = "verification failed";
  } catch (const Error& e) {
    row.error = e.what();
  }
  if (c.timings) {
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text) {
  const Json j = Json::parse(text);
  if (!j.is_object()) throw Error("bench config must be a JSON object");
  static constexpr std::array<std::string_view, 17> kKeys = {
      "kind", "count", "n", "m", "max_cost", "max_length", "seed", "eps", "level",
      "terminals", "k", "slack", "L", "alpha", "timings", "workers", "comment"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error("unknown bench config key '" + key + "'");
    }
  }
  BenchConfig c;
  c.kind = j.value("kind", c.kind);
  if (c.kind != "slst" && c.kind != "ndbd" && c.kind != "spanner") {
    throw Error("unknown bench kind '" + c.kind + "'");
  }
  c.count = j.value("count", c.count);
  c.shape.n = j.value("n", c.shape.n);
  c.shape.m = j.value("m", c.shape.m);
  c.shape.max_cost = j.value("max_cost", c.shape.max_cost);
  c.shape.max_length = j.value("max_length", c.shape.max_length);
  c.shape.seed = j.value("seed", c.shape.seed);
  c.eps = j.value("eps", c.eps);
  c.level = j.value("level", c.level);
  c.terminals = j.value("terminals", c.terminals);
  c.k = j.value("k", c.k);
  if (j.contains("slack")) c.slack = parse_rational(j.at("slack").get<std::string>());
  c.bound = j.value("L", c.bound);
  if (j.contains("alpha")) c.alpha = parse_rational(j.at("alpha").get<std::string>());
  c.timings = j.value("timings", c.timings);
  c.workers = j.value("workers", c.workers);
  return c;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows(config.count);
  const std::size_t workers = config.workers == 0 ? worker_count() : config.workers;
  parallel_for(config.count, workers, [&](std::size_t i, std::size_t) { rows[i] = run_row(config, i); });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,m,seed,approx_cost,oracle_cost,ratio,violation,bound,runtime_ms,error\n";
  for (const BenchRow& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.seed) + ',' +
           field(r.approx_cost) + ',' + field(r.oracle_cost) + ',' + field(r.ratio) + ',' +
           field(r.violation) + ',' + field(r.bound) + ',' + field(r.runtime_ms) + ',' +
           csv_escape(r.error) + '\n';
  }
  return out;
}

std::string bench_json(const BenchConfig& c, const std::vector<BenchRow>& rows) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["config"] = Json{{"kind", c.kind},     {"count", c.count},
                     {"n", c.shape.n},      {"m", c.shape.m},
                     {"max_cost", c.shape.max_cost}, {"max_length", c.shape.max_length},
                     {"seed", c.shape.seed}, {"eps", c.eps},
                     {"level", c.level},    {"terminals", c.terminals},
                     {"k", c.k},            {"slack", c.slack.str()},
                     {"L", c.bound},        {"alpha", c.alpha.str()}};
  Json arr = Json::array();
  for (const BenchRow& r : rows) {
    arr.push_back(Json{{"n", r.n},
                       {"m", r.m},
                       {"seed", r.seed},
                       {"approx_cost", opt(r.approx_cost)},
                       {"oracle_cost", opt(r.oracle_cost)},
                       {"ratio", opt(r.ratio)},
                       {"violation", opt(r.violation)},
                       {"bound", opt(r.bound)},
                       {"runtime_ms", opt(r.runtime_ms)},
                       {"error", r.error}});
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace slnet
