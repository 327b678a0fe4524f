#pragma once

// Exact Fourier-Motzkin elimination over the rationals for small systems of
// linear inequalities  coeffs . x + constant >= 0.

#include "schubss/rational.hpp"

#include <optional>
#include <vector>

namespace schubss {

struct LinearInequality {
  std::vector<Rational> coeffs;
  Rational constant = 0;

  /// coeffs . x + constant.
  Rational evaluate(const std::vector<Rational>& x) const;
  bool satisfied_by(const std::vector<Rational>& x) const { return evaluate(x) >= 0; }
};

struct Interval {
  std::optional<Rational> lower;  // unbounded below when empty
  std::optional<Rational> upper;
};

class InequalitySystem {
 public:
  explicit InequalitySystem(int variables) : variables_(variables) {}

  int variables() const noexcept { return variables_; }
  const std::vector<LinearInequality>& rows() const noexcept { return rows_; }

  /// Throws UsageError on a column-count mismatch.
  void add(LinearInequality row);
  /// Adds both coeffs . x + constant >= 0 and its negation.
  void add_equality(const LinearInequality& row);

  /// A point satisfying every row, or nullopt if the system is infeasible.
  /// The point is re-checked against the original rows before it is returned.
  std::optional<std::vector<Rational>> solve() const;

  /// Exact range of x_var over the feasible set (nullopt if infeasible).
  std::optional<Interval> range_of(int var) const;

 private:
  int variables_;
  std::vector<LinearInequality> rows_;
};

}  // namespace schubss
