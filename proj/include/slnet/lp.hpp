#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace slnet::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(Status s);

/// (index, coefficient) pair of a sparse row or column.
using Entry = std::pair<int, double>;

struct Options {
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  int refactor_interval = 64;
  std::int64_t iteration_limit = 5'000'000;
};

/// Minimization LP  min c·x  s.t.  row_lower ≤ A x ≤ row_upper,
/// col_lower ≤ x ≤ col_upper, solved by a bounded primal simplex method.
///
/// The model may grow between solves. The last basis is kept: a new column
/// enters nonbasic at its lower bound and a new row enters with its activity
/// basic, so a primal feasible basis stays feasible whenever the new rows
/// are satisfied by the current point (the column generation case).
class LinearProgram {
 public:
  explicit LinearProgram(Options options = {});
  ~LinearProgram();
  LinearProgram(LinearProgram&&) noexcept;
  LinearProgram& operator=(LinearProgram&&) noexcept;

  int add_column(double cost, double lower, double upper, std::span<const Entry> rows = {});
  int add_row(double lower, double upper, std::span<const Entry> columns = {});

  int num_columns() const;
  int num_rows() const;

  Status solve();

  double objective() const;
  double column_value(int j) const;
  /// A x for row i.
  double row_activity(int i) const;
  /// Dual multiplier y_i: the objective's rate of change per unit increase of
  /// the binding row bound. Non-negative on binding `≥` rows of a minimization.
  double row_dual(int i) const;
  /// c_j − yᵀA_j.
  double reduced_cost(int j) const;

  std::int64_t iterations() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace slnet::lp
