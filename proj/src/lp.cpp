#include "slnet/lp.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>

#include "slnet/error.hpp"

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

enum class VarState : std::uint8_t { kBasic, kLower, kUpper, kFree };

// Variables are coded as 2j for column j and 2i+1 for the activity of row i.
constexpr int col_code(int j) { return 2 * j; }
constexpr int row_code(int i) { return 2 * i + 1; }
constexpr bool is_row(int code) { return code & 1; }
constexpr int index_of(int code) { return code >> 1; }

// Product-form update: the basis column at `pos` was replaced by a column
// whose FTRAN image is `w`; `pivot` = w[pos], `others` = the remaining nonzeros.
struct Eta {
  int pos;
  double pivot;
  std::vector<Entry> others;
};

constexpr int kBlandAfter = 50;

}  // namespace

struct LinearProgram::Impl {
  Options opt;
  int ncols = 0, nrows = 0;
  std::vector<double> cost, clo, cup, rlo, rup;
  std::vector<std::vector<Entry>> col_entries;  // (row, coefficient)

  std::vector<VarState> cstate, rstate;
  std::vector<double> cval, rval;
  std::vector<int> cpos, rpos;
  std::vector<int> basic;  // position -> variable code

  mutable Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  std::vector<Eta> etas;
  std::vector<double> duals;
  std::int64_t iterations = 0;

  double lower(int code) const { return is_row(code) ? rlo[index_of(code)] : clo[index_of(code)]; }
  double upper(int code) const { return is_row(code) ? rup[index_of(code)] : cup[index_of(code)]; }
  double& value(int code) { return is_row(code) ? rval[index_of(code)] : cval[index_of(code)]; }
  VarState& state(int code) { return is_row(code) ? rstate[index_of(code)] : cstate[index_of(code)]; }
  double phase2_cost(int code) const { return is_row(code) ? 0.0 : cost[index_of(code)]; }

  static VarState resting_state(double lo, double up) {
    if (std::isfinite(lo)) return VarState::kLower;
    if (std::isfinite(up)) return VarState::kUpper;
    return VarState::kFree;
  }
  static double resting_value(VarState s, double lo, double up) {
    if (s == VarState::kLower) return lo;
    if (s == VarState::kUpper) return up;
    return 0.0;
  }

  void reset_to_slack_basis() {
    basic.assign(nrows, 0);
    for (int j = 0; j < ncols; ++j) {
      cstate[j] = resting_state(clo[j], cup[j]);
      cval[j] = resting_value(cstate[j], clo[j], cup[j]);
      cpos[j] = -1;
    }
    for (int i = 0; i < nrows; ++i) {
      rstate[i] = VarState::kBasic;
      rpos[i] = i;
      basic[i] = row_code(i);
    }
  }

  // Snapshot of the basis at the last refactorization. Rows whose slack is
  // basic are eliminated directly; only the block of binding rows × basic
  // structural columns goes through LU.
  std::vector<int> base_struct_pos;   // local column -> basis position
  std::vector<int> base_struct_col;   // local column -> LP column
  std::vector<int> base_binding_row;  // local row -> LP row
  std::vector<int> base_row_local;    // LP row -> local row, or -1 if its slack is basic
  std::vector<std::pair<int, int>> base_slack;  // (LP row, basis position)

  bool refactor() {
    etas.clear();
    base_struct_pos.clear();
    base_struct_col.clear();
    base_binding_row.clear();
    base_slack.clear();
    base_row_local.assign(nrows, -1);
    for (int p = 0; p < nrows; ++p) {
      const int code = basic[p];
      if (is_row(code)) {
        base_slack.emplace_back(index_of(code), p);
      } else {
        base_struct_pos.push_back(p);
        base_struct_col.push_back(index_of(code));
      }
    }
    for (int i = 0; i < nrows; ++i) {
      if (rstate[i] != VarState::kBasic) {
        base_row_local[i] = static_cast<int>(base_binding_row.size());
        base_binding_row.push_back(i);
      }
    }
    const int k = static_cast<int>(base_struct_col.size());
    if (static_cast<int>(base_binding_row.size()) != k) return false;
    if (k > 0) {
      std::vector<Eigen::Triplet<double>> triplets;
      for (int c = 0; c < k; ++c) {
        for (const auto& [r, v] : col_entries[base_struct_col[c]]) {
          if (base_row_local[r] >= 0) triplets.emplace_back(base_row_local[r], c, v);
        }
      }
      Eigen::SparseMatrix<double> b(k, k);
      b.setFromTriplets(triplets.begin(), triplets.end());
      b.makeCompressed();
      lu.analyzePattern(b);
      lu.factorize(b);
      if (lu.info() != Eigen::Success) return false;
    }
    compute_basic_values();
    return true;
  }

  void refactor_or_reset() {
    if (refactor()) return;
    reset_to_slack_basis();
    if (!refactor()) throw LpFailure("slack basis failed to factorize");
  }

  /// B⁻¹ v: row-indexed input, position-indexed output.
  std::vector<double> ftran(const std::vector<double>& v) const {
    std::vector<double> x(nrows, 0.0);
    const int k = static_cast<int>(base_struct_col.size());
    if (k > 0) {
      Eigen::VectorXd rhs(k);
      for (int r = 0; r < k; ++r) rhs[r] = v[base_binding_row[r]];
      const Eigen::VectorXd z = lu.solve(rhs);
      // Slack rows: A_i·x_J − x_i = v_i.
      std::vector<double> act(nrows, 0.0);
      for (int c = 0; c < k; ++c) {
        x[base_struct_pos[c]] = z[c];
        if (z[c] == 0.0) continue;
        for (const auto& [r, a] : col_entries[base_struct_col[c]]) {
          if (base_row_local[r] < 0) act[r] += a * z[c];
        }
      }
      for (const auto& [i, p] : base_slack) x[p] = act[i] - v[i];
    } else {
      for (const auto& [i, p] : base_slack) x[p] = -v[i];
    }
    for (const Eta& eta : etas) {
      const double vr = x[eta.pos] / eta.pivot;
      x[eta.pos] = vr;
      if (vr != 0.0) {
        for (const auto& [i, w] : eta.others) x[i] -= w * vr;
      }
    }
    return x;
  }

  /// B⁻ᵀ z: position-indexed input, row-indexed output.
  std::vector<double> btran(std::vector<double> z) const {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      double acc = z[it->pos];
      for (const auto& [i, w] : it->others) acc -= z[i] * w;
      z[it->pos] = acc / it->pivot;
    }
    std::vector<double> y(nrows, 0.0);
    for (const auto& [i, p] : base_slack) y[i] = -z[p];
    const int k = static_cast<int>(base_struct_col.size());
    if (k > 0) {
      Eigen::VectorXd rhs(k);
      for (int c = 0; c < k; ++c) {
        double acc = z[base_struct_pos[c]];
        for (const auto& [r, a] : col_entries[base_struct_col[c]]) {
          if (base_row_local[r] < 0) acc -= a * y[r];
        }
        rhs[c] = acc;
      }
      const Eigen::VectorXd out = lu.transpose().solve(rhs);
      for (int r = 0; r < k; ++r) y[base_binding_row[r]] = out[r];
    }
    return y;
  }

  void compute_basic_values() {
    std::vector<double> rhs(nrows, 0.0);
    for (int j = 0; j < ncols; ++j) {
      if (cstate[j] == VarState::kBasic || cval[j] == 0.0) continue;
      for (const auto& [r, v] : col_entries[j]) rhs[r] -= v * cval[j];
    }
    for (int i = 0; i < nrows; ++i) {
      if (rstate[i] != VarState::kBasic) rhs[i] += rval[i];
    }
    const std::vector<double> xb = ftran(rhs);
    for (int p = 0; p < nrows; ++p) value(basic[p]) = xb[p];
  }

  std::vector<double> column_image(int code) const {
    std::vector<double> a(nrows, 0.0);
    if (is_row(code)) {
      a[index_of(code)] = -1.0;
    } else {
      for (const auto& [r, v] : col_entries[index_of(code)]) a[r] += v;
    }
    return a;
  }

  // Reduced cost of a nonbasic variable under row prices y and phase costs.
  double reduced(int code, const std::vector<double>& y, bool phase1) const {
    if (is_row(code)) return y[index_of(code)];
    double d = phase1 ? 0.0 : cost[index_of(code)];
    for (const auto& [r, v] : col_entries[index_of(code)]) d -= y[r] * v;
    return d;
  }

  int infeasibility_sign(int code, double x) const {
    if (x < lower(code) - opt.primal_tolerance) return -1;
    if (x > upper(code) + opt.primal_tolerance) return 1;
    return 0;
  }

  Status run() {
    refactor_or_reset();
    int degenerate_streak = 0;
    bool verified = false;
    while (true) {
      if (iterations >= opt.iteration_limit) return Status::kIterationLimit;

      // Phase selection and basic costs.
      std::vector<double> cb(nrows, 0.0);
      bool phase1 = false;
      for (int p = 0; p < nrows; ++p) {
        const int s = infeasibility_sign(basic[p], value(basic[p]));
        if (s != 0) phase1 = true;
        cb[p] = s;
      }
      if (!phase1) {
        for (int p = 0; p < nrows; ++p) cb[p] = phase2_cost(basic[p]);
      }
      const std::vector<double> y = btran(std::move(cb));

      // Pricing.
      const bool bland = degenerate_streak > kBlandAfter;
      int entering = -1;
      double best = 0.0;
      double entering_d = 0.0;
      auto consider = [&](int code, VarState st) {
        if (st == VarState::kBasic || lower(code) == upper(code)) return;
        const double d = reduced(code, y, phase1);
        const bool attractive = (st == VarState::kLower && d < -opt.dual_tolerance) ||
                                (st == VarState::kUpper && d > opt.dual_tolerance) ||
                                (st == VarState::kFree && std::abs(d) > opt.dual_tolerance);
        if (!attractive) return;
        if (bland) {
          if (entering < 0 || code < entering) {
            entering = code;
            entering_d = d;
          }
        } else if (std::abs(d) > best) {
          best = std::abs(d);
          entering = code;
          entering_d = d;
        }
      };
      for (int j = 0; j < ncols; ++j) consider(col_code(j), cstate[j]);
      for (int i = 0; i < nrows; ++i) consider(row_code(i), rstate[i]);

      if (entering < 0) {
        if (!verified && !etas.empty()) {
          // Re-derive values from a fresh factorization before declaring an end state.
          refactor_or_reset();
          verified = true;
          continue;
        }
        if (phase1) return Status::kInfeasible;
        duals = y;
        return Status::kOptimal;
      }
      verified = false;
      ++iterations;

      const double dir = entering_d < 0 ? 1.0 : -1.0;
      const std::vector<double> w = ftran(column_image(entering));

      // Harris two-pass ratio test. Basic p moves at rate -dir*w[p].
      // In phase 1 an infeasible basic variable may move freely away from its
      // violated bound and stops at the first breakpoint where it turns feasible.
      auto effective_bounds = [&](int code, double x) {
        double lo = lower(code), up = upper(code);
        if (phase1) {
          const int s = infeasibility_sign(code, x);
          if (s < 0) {
            up = lo;
            lo = -kInfinity;
          } else if (s > 0) {
            lo = up;
            up = kInfinity;
          }
        }
        return std::pair{lo, up};
      };
      double theta_max = kInfinity;
      for (int p = 0; p < nrows; ++p) {
        if (std::abs(w[p]) <= opt.pivot_tolerance) continue;
        const double rate = -dir * w[p];
        const double x = value(basic[p]);
        auto [lo, up] = effective_bounds(basic[p], x);
        const double limit = rate < 0 ? (x - (lo - opt.primal_tolerance)) / -rate
                                      : ((up + opt.primal_tolerance) - x) / rate;
        theta_max = std::min(theta_max, limit);
      }
      const double own_range = upper(entering) - lower(entering);
      int leave_pos = -1;
      double theta = kInfinity;
      double leave_bound = 0.0;
      double best_pivot = 0.0;
      for (int p = 0; p < nrows; ++p) {
        if (std::abs(w[p]) <= opt.pivot_tolerance) continue;
        const double rate = -dir * w[p];
        const double x = value(basic[p]);
        auto [lo, up] = effective_bounds(basic[p], x);
        const double bound = rate < 0 ? lo : up;
        if (!std::isfinite(bound)) continue;
        const double ratio = std::max(0.0, (bound - x) / rate);
        if (ratio > theta_max) continue;
        const bool take =
            bland ? (leave_pos < 0 || ratio < theta ||
                     (ratio == theta && basic[p] < basic[leave_pos]))
                  : (std::abs(w[p]) > best_pivot);
        if (take) {
          leave_pos = p;
          theta = ratio;
          leave_bound = bound;
          best_pivot = std::abs(w[p]);
        }
      }
      const bool flip = std::isfinite(own_range) && (leave_pos < 0 || own_range <= theta);
      if (leave_pos < 0 && !flip) {
        if (phase1) throw LpFailure("unbounded ray during phase 1");
        return Status::kUnbounded;
      }
      if (flip) theta = own_range;

      degenerate_streak = theta <= 1e-12 ? degenerate_streak + 1 : 0;

      value(entering) += dir * theta;
      if (theta != 0.0) {
        for (int p = 0; p < nrows; ++p) {
          if (w[p] != 0.0) value(basic[p]) -= dir * theta * w[p];
        }
      }

      if (flip) {
        state(entering) = dir > 0 ? VarState::kUpper : VarState::kLower;
        value(entering) = dir > 0 ? upper(entering) : lower(entering);
        continue;
      }

      const int leaving = basic[leave_pos];
      value(leaving) = leave_bound;
      if (lower(leaving) == upper(leaving) || leave_bound == lower(leaving)) {
        state(leaving) = VarState::kLower;
      } else if (leave_bound == upper(leaving)) {
        state(leaving) = VarState::kUpper;
      } else {
        state(leaving) = VarState::kFree;
      }
      (is_row(leaving) ? rpos[index_of(leaving)] : cpos[index_of(leaving)]) = -1;
      state(entering) = VarState::kBasic;
      (is_row(entering) ? rpos[index_of(entering)] : cpos[index_of(entering)]) = leave_pos;
      basic[leave_pos] = entering;

      Eta eta{leave_pos, w[leave_pos], {}};
      for (int p = 0; p < nrows; ++p) {
        if (p != leave_pos && w[p] != 0.0) eta.others.emplace_back(p, w[p]);
      }
      etas.push_back(std::move(eta));
      if (static_cast<int>(etas.size()) >= opt.refactor_interval) refactor_or_reset();
    }
  }
};

LinearProgram::LinearProgram(Options options) : impl_(std::make_unique<Impl>()) {
  impl_->opt = options;
}
LinearProgram::~LinearProgram() = default;
LinearProgram::LinearProgram(LinearProgram&&) noexcept = default;
LinearProgram& LinearProgram::operator=(LinearProgram&&) noexcept = default;

int LinearProgram::add_column(double cost, double lower, double upper, std::span<const Entry> rows) {
  Impl& m = *impl_;
  if (lower > upper) throw LpFailure("column bounds cross");
  const int j = m.ncols++;
  m.cost.push_back(cost);
  m.clo.push_back(lower);
  m.cup.push_back(upper);
  m.col_entries.emplace_back();
  for (const auto& [r, v] : rows) {
    if (r < 0 || r >= m.nrows) throw LpFailure("column entry references unknown row");
    if (v != 0.0) m.col_entries[j].emplace_back(r, v);
  }
  const VarState s = Impl::resting_state(lower, upper);
  m.cstate.push_back(s);
  m.cval.push_back(Impl::resting_value(s, lower, upper));
  m.cpos.push_back(-1);
  return j;
}

int LinearProgram::add_row(double lower, double upper, std::span<const Entry> columns) {
  Impl& m = *impl_;
  if (lower > upper) throw LpFailure("row bounds cross");
  const int i = m.nrows++;
  m.rlo.push_back(lower);
  m.rup.push_back(upper);
  double activity = 0.0;
  for (const auto& [j, v] : columns) {
    if (j < 0 || j >= m.ncols) throw LpFailure("row entry references unknown column");
    if (v == 0.0) continue;
    m.col_entries[j].emplace_back(i, v);
    activity += v * m.cval[j];
  }
  m.rstate.push_back(VarState::kBasic);
  m.rval.push_back(activity);
  m.rpos.push_back(static_cast<int>(m.basic.size()));
  m.basic.push_back(row_code(i));
  m.duals.push_back(0.0);
  return i;
}

int LinearProgram::num_columns() const { return impl_->ncols; }
int LinearProgram::num_rows() const { return impl_->nrows; }

Status LinearProgram::solve() { return impl_->run(); }

double LinearProgram::objective() const {
  double z = 0.0;
  for (int j = 0; j < impl_->ncols; ++j) z += impl_->cost[j] * impl_->cval[j];
  return z;
}

double LinearProgram::column_value(int j) const { return impl_->cval.at(j); }

double LinearProgram::row_activity(int i) const {
  double a = 0.0;
  for (int j = 0; j < impl_->ncols; ++j) {
    for (const auto& [r, v] : impl_->col_entries[j]) {
      if (r == i) a += v * impl_->cval[j];
    }
  }
  return a;
}

double LinearProgram::row_dual(int i) const { return impl_->duals.at(i); }

double LinearProgram::reduced_cost(int j) const {
  return impl_->reduced(col_code(j), impl_->duals, false);
}

std::int64_t LinearProgram::iterations() const { return impl_->iterations; }

}  // namespace slnet::lp
