#pragma once

// Torus-semistability of Schubert varieties in G/P for maximal parabolics.
//
// A Schubert variety X(w), w in W^{I} with I = S minus Supp(chi), admits
// semistable points for L_chi exactly when w(chi) <= 0 coordinatewise in the
// simple-root basis. This module computes, for chi = the fundamental weight
// varpi_r, the Bruhat-minimal admitting elements of W^{I_r} by brute force and
// compares them with the closed-form classification for types B, C, D.

#include "schubss/rootsys.hpp"
#include "schubss/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubss {

/// Tuple (i_1, ..., i_p) with 1 <= i_1, i_{k+1} - i_k >= 2 and i_p <= q.
class IndexTuple {
 public:
  /// Throws UsageError if the gap condition or the bound q fails.
  IndexTuple(std::vector<int> entries, int q);

  int p() const noexcept { return static_cast<int>(entries_.size()); }
  int q() const noexcept { return q_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  /// Largest entry; 0 for the empty tuple.
  int last() const noexcept { return entries_.empty() ? 0 : entries_.back(); }

 private:
  std::vector<int> entries_;
  int q_;
};

/// Every tuple of the family J_{p,q}, in lexicographic order. J_{0,q} = { () }.
std::vector<IndexTuple> index_tuples(int p, int q);

/// All simple-root coordinates <= 0.
bool is_nonpositive(const Weight& chi);
/// All simple-root coordinates >= 0.
bool is_nonnegative(const Weight& chi);

/// Semistability criterion: checks that chi is dominant, that k * chi lies in
/// the root lattice (k = clearing_factor), and that w is a minimal coset
/// representative for S minus Supp(chi); then returns whether w(chi) <= 0.
/// Violations throw PreconditionError with a distinct Reason.
bool admits_semistable(const RootSystem& rs, const WeylElement& w, const Weight& chi,
                       const Integer& clearing_factor = 1);

/// Support of a weight as 1-based labels.
std::vector<int> support(const Weight& chi);

struct AdmittingElement {
  WeylElement element;
  Weight weight;  // w(varpi_r), unscaled
};

enum class MinimalityFilter {
  global,  // no other admitting u with u <= w in Bruhat order
  local,   // no admitting s_beta w in W^{I_r} of length l(w) - 1
};

/// Bruhat-minimal elements of M = { w in W^{I_r} : w(varpi_r) <= 0 } under one filter.
/// Sorted by weight, then by word.
std::vector<AdmittingElement> minimal_admitting(const RootSystem& rs, int r, MinimalityFilter filter,
                                                std::uint64_t limit = default_enumeration_limit());

/// Both filters, cross-checked; InternalError if they disagree.
std::vector<AdmittingElement> minimal_admitting_oracle(const RootSystem& rs, int r,
                                                       std::uint64_t limit = default_enumeration_limit());

/// Every w in W^{I_r} with w(varpi_r) <= 0.
std::vector<AdmittingElement> admitting_elements(const RootSystem& rs, int r,
                                                 std::uint64_t limit = default_enumeration_limit());

/// Closed-form description of the minimal weights.
struct ClosedForm {
  enum class Status { covered, theorem_silent };

  Status status = Status::theorem_silent;
  std::string family;           // short description of the case, for reports
  std::vector<Weight> weights;  // sorted multiset of w(varpi_r)
  std::optional<Word> word;     // explicit element, when the case names one
  Integer scale = 1;            // k with k * varpi_r integral

  bool covered() const noexcept { return status == Status::covered; }
};

/// Expected minimal weights for types B, C, D. Cases the classification does
/// not address (type A, C_n with r = n, D_3, E/F/G) are marked theorem-silent.
/// When an explicit word is part of the case, its action on k * varpi_r is
/// checked against the stated weight (InternalError on mismatch).
ClosedForm closed_form_minimal_weights(const RootSystem& rs, int r);

/// The explicit element for the spin-type case D_n, r in {n-1, n}:
/// w_{m+1} ... w_1 with m = floor((n-1)/2), w_i = tau_i s_{n-1} or tau_i s_n by
/// parity of i, tau_i = s_{2i-1} ... s_{n-2}.
Word spin_case_word(int n, int r);
/// 4 * w(varpi_r) for that element, by the mod-4 branches.
std::vector<long> spin_case_scaled_weight(int n, int r);
/// The element s_{2m-1}...s_n ... s_1...s_n for B_n, r = n.
Word b_last_node_word(int n);

struct MinimalSetReport {
  Kind kind;
  int rank;
  int r;
  std::vector<AdmittingElement> oracle;
  ClosedForm expected;
  bool match = false;
  std::vector<std::string> mismatches;

  enum class Verdict { match, mismatch, theorem_silent };
  Verdict verdict() const;
};

std::string to_string(MinimalSetReport::Verdict v);

/// Oracle plus closed form; match requires equal weight multisets and an
/// injective element-to-weight map.
MinimalSetReport minimal_set_report(const RootSystem& rs, int r, std::uint64_t limit = default_enumeration_limit());

/// Maximal-length elements w of W^{I_r} with w(varpi_r) >= 0 and the maximal
/// coordinate a of each w(varpi_r).
struct MaxCoordinateReport {
  struct Entry {
    WeylElement element;
    Weight weight;
    Rational max_coordinate;
    std::vector<int> argmax;  // labels attaining it
  };
  Kind kind;
  int rank;
  int r;
  int max_length = 0;
  /// 2 <= r <= n-2, the range the statement is proved for. Outside it the
  /// check still runs; r = 1 and the end nodes give a < 1.
  bool in_scope = false;
  std::vector<Entry> entries;
  bool pass = true;
  std::vector<std::string> violations;
};

/// Checks a in {1, 3/2}, and that a = 3/2 happens only for type D, r odd,
/// attained at alpha_{n-1} or alpha_n. Types B, C, D only; any r.
MaxCoordinateReport check_max_coordinate(const RootSystem& rs, int r,
                                         std::uint64_t limit = default_enumeration_limit());

}  // namespace schubss
