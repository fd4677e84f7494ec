#include <Highs.h>

#include <cmath>

#include "slnet/error.hpp"
#include "slnet/lp.hpp"

namespace slnet::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
    case Status::kIterationLimit:
      return "iteration-limit";
  }
  return "?";
}

namespace {

double to_highs(double bound) {
  if (std::isinf(bound)) return bound > 0 ? kHighsInf : -kHighsInf;
  return bound;
}

}  // namespace

struct LinearProgram::Impl {
  Options opt;
  Highs highs;
  std::vector<double> cost;
  std::vector<double> cval, rval, rdual, cdual;
  std::int64_t iterations = 0;
};

LinearProgram::LinearProgram(Options options) : impl_(std::make_unique<Impl>()) {
  impl_->opt = options;
  Highs& h = impl_->highs;
  h.setOptionValue("output_flag", false);
  h.setOptionValue("threads", 1);
  h.setOptionValue("presolve", "off");
  h.setOptionValue("simplex_strategy", 4);
  h.setOptionValue("primal_feasibility_tolerance", options.primal_tolerance);
  h.setOptionValue("dual_feasibility_tolerance", options.dual_tolerance);
}
LinearProgram::~LinearProgram() = default;
LinearProgram::LinearProgram(LinearProgram&&) noexcept = default;
LinearProgram& LinearProgram::operator=(LinearProgram&&) noexcept = default;

int LinearProgram::add_column(double cost, double lower, double upper, std::span<const Entry> rows) {
  if (lower > upper) throw LpFailure("column bounds cross");
  Impl& m = *impl_;
  std::vector<HighsInt> idx;
  std::vector<double> val;
  const HighsInt nrows = m.highs.getNumRow();
  for (const auto& [r, v] : rows) {
    if (r < 0 || r >= nrows) throw LpFailure("column entry references unknown row");
    if (v == 0.0) continue;
    idx.push_back(r);
    val.push_back(v);
  }
  m.highs.addCol(cost, to_highs(lower), to_highs(upper), static_cast<HighsInt>(idx.size()), idx.data(),
                 val.data());
  m.cost.push_back(cost);
  m.cval.push_back(0.0);
  m.cdual.push_back(0.0);
  return static_cast<int>(m.cost.size()) - 1;
}

int LinearProgram::add_row(double lower, double upper, std::span<const Entry> columns) {
  if (lower > upper) throw LpFailure("row bounds cross");
  Impl& m = *impl_;
  std::vector<HighsInt> idx;
  std::vector<double> val;
  for (const auto& [j, v] : columns) {
    if (j < 0 || j >= static_cast<int>(m.cost.size())) throw LpFailure("row entry references unknown column");
    if (v == 0.0) continue;
    idx.push_back(j);
    val.push_back(v);
  }
  m.highs.addRow(to_highs(lower), to_highs(upper), static_cast<HighsInt>(idx.size()), idx.data(), val.data());
  m.rval.push_back(0.0);
  m.rdual.push_back(0.0);
  return static_cast<int>(m.rval.size()) - 1;
}

int LinearProgram::num_columns() const { return static_cast<int>(impl_->cost.size()); }
int LinearProgram::num_rows() const { return static_cast<int>(impl_->rval.size()); }

Status LinearProgram::solve() {
  Impl& m = *impl_;
  m.highs.setOptionValue("simplex_iteration_limit",
                         static_cast<HighsInt>(std::min<std::int64_t>(m.opt.iteration_limit, kHighsIInf)));
  if (m.highs.run() == HighsStatus::kError) throw LpFailure("HiGHS returned an error");
  m.iterations += m.highs.getInfo().simplex_iteration_count;
  switch (m.highs.getModelStatus()) {
    case HighsModelStatus::kOptimal:
    case HighsModelStatus::kModelEmpty:
      break;
    case HighsModelStatus::kInfeasible:
      return Status::kInfeasible;
    case HighsModelStatus::kUnbounded:
    case HighsModelStatus::kUnboundedOrInfeasible:
      return Status::kUnbounded;
    case HighsModelStatus::kIterationLimit:
      return Status::kIterationLimit;
    default:
      throw LpFailure(std::string("HiGHS status ") + m.highs.modelStatusToString(m.highs.getModelStatus()));
  }
  const HighsSolution& s = m.highs.getSolution();
  m.cval.assign(s.col_value.begin(), s.col_value.end());
  m.cdual.assign(s.col_dual.begin(), s.col_dual.end());
  m.rval.assign(s.row_value.begin(), s.row_value.end());
  m.rdual.assign(s.row_dual.begin(), s.row_dual.end());
  return Status::kOptimal;
}

double LinearProgram::objective() const {
  double z = 0.0;
  for (std::size_t j = 0; j < impl_->cost.size(); ++j) z += impl_->cost[j] * impl_->cval[j];
  return z;
}

double LinearProgram::column_value(int j) const { return impl_->cval.at(j); }
double LinearProgram::row_activity(int i) const { return impl_->rval.at(i); }
double LinearProgram::row_dual(int i) const { return impl_->rdual.at(i); }
double LinearProgram::reduced_cost(int j) const { return impl_->cdual.at(j); }
std::int64_t LinearProgram::iterations() const { return impl_->iterations; }

}  // namespace slnet::lp
