#pragma once

// Coxeter elements w for which X(w) has torus-semistable points for some
// nonzero dominant chi: decided as feasibility of the cone
//   <chi, alpha_j^vee> >= 0,  -(w chi)_j >= 0,  chi = sum a_i alpha_i != 0,
// and compared with the classification by type.

#include "schubss/fourier_motzkin.hpp"
#include "schubss/rootsys.hpp"
#include "schubss/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubss {

/// 2n homogeneous rows in n unknowns: n dominance rows, then n nonpositivity rows.
class FeasibilityProblem {
 public:
  FeasibilityProblem(const RootSystem& rs, const WeylElement& w);

  int variables() const noexcept { return n_; }
  const std::vector<LinearInequality>& rows() const noexcept { return rows_; }

  /// All rows >= 0 at the integer point a.
  bool satisfied_by(std::span<const long> a) const;
  /// The homogeneous rows plus sum a_i = 1.
  InequalitySystem normalized_system() const;

 private:
  int n_;
  std::vector<LinearInequality> rows_;
};

/// Necessary condition: every right descent alpha of w has at most two
/// Dynkin neighbours, and two only in type A_3.
bool lemma41_filter(const RootSystem& rs, const WeylElement& w);

struct Decision {
  bool admits = false;
  std::optional<Weight> witness;  // integer coordinates, set iff admits
};

/// Exact decision by Fourier-Motzkin on the normalized system; the rational
/// solution is scaled to an integer witness.
Decision decide_admits(const RootSystem& rs, const WeylElement& w);

/// Independent route: some a in {0..bound}^n minus 0 satisfies every row.
/// Returns the first such a in lexicographic order.
std::optional<std::vector<long>> grid_search(const RootSystem& rs, const WeylElement& w, int bound = 6);

/// What the classification says about w.
struct Expectation {
  enum class Kind {
    biconditional,  // admits iff `admits`
    necessity,      // admits implies `admits` (pattern membership)
    uncovered,      // no statement for this type/rank
  };
  Kind kind = Kind::uncovered;
  bool admits = false;
  std::string rule;  // short description of the case
};

std::string to_string(Expectation::Kind k);

/// Pattern elements for the necessity cases, as elements (compared by matrix).
std::vector<WeylElement> expected_pattern(const RootSystem& rs);
Expectation expected_thm42(const RootSystem& rs, const WeylElement& w);

class CoxeterReport {
 public:
  /// Re-verifies a positive decision's witness exactly; InternalError otherwise.
  CoxeterReport(const RootSystem& rs, WeylElement element, bool passes_lemma41, Decision decision,
                Expectation expected);

  const WeylElement& element() const noexcept { return element_; }
  bool passes_lemma41() const noexcept { return passes_lemma41_; }
  bool admits() const noexcept { return decision_.admits; }
  const std::optional<Weight>& witness() const noexcept { return decision_.witness; }
  const Expectation& expected() const noexcept { return expected_; }
  /// Biconditional: equal. Necessity: admits implies expected. Uncovered: true.
  bool agreement() const noexcept { return agreement_; }

 private:
  WeylElement element_;
  bool passes_lemma41_;
  Decision decision_;
  Expectation expected_;
  bool agreement_;
};

/// One report per distinct Coxeter element, in coxeter_elements order.
/// workers = 0 uses the hardware concurrency.
std::vector<CoxeterReport> classify_all(const RootSystem& rs, unsigned workers = 1);

/// Exact check that the feasible cone of w is the ray through `direction`:
/// on the slice sum a = 1 every coordinate range collapses to that point.
bool cone_is_ray(const RootSystem& rs, const WeylElement& w, std::span<const long> direction);

}  // namespace schubss
