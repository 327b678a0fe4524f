#pragma once

// Weyl group elements as integer action matrices on the simple-root basis.
// Column j of the matrix is w(alpha_j). Equality and hashing use the matrix;
// the stored reduced word is a certificate only.

#include "schubss/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace schubss {

/// Reduced word as 1-based simple-reflection labels; w = s_{word[0]} s_{word[1]} ...
using Word = std::vector<int>;

std::string to_string(const Word& word);

/// Default upper bound on |W| for any enumeration. Covers B_7 / C_7 (645120).
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// Limit from the SCHUBSS_ENUM_LIMIT environment variable, else the default.
std::uint64_t default_enumeration_limit();

class WeylElement {
 public:
  using Entry = std::int8_t;

  /// Identity of the given rank.
  explicit WeylElement(int rank);

  /// Element from a word (any word, reduced or not); stores a reduced word.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);
  /// Element from an action matrix (row-major, column j = image of alpha_j).
  static WeylElement from_matrix(const RootSystem& rs, std::vector<Entry> matrix);

  int rank() const noexcept { return rank_; }
  const Word& word() const noexcept { return word_; }
  /// Length of the stored reduced word.
  int word_length() const noexcept { return static_cast<int>(word_.size()); }
  int entry(int row, int col) const noexcept { return matrix_[static_cast<std::size_t>(row * rank_ + col)]; }
  const std::vector<Entry>& matrix() const noexcept { return matrix_; }
  bool is_identity() const;

  /// True iff w(alpha_label) is a negative root, i.e. l(w s_label) < l(w).
  bool has_right_descent(int label) const;

  bool operator==(const WeylElement& other) const { return matrix_ == other.matrix_; }

 private:
  friend class WeylEngine;
  WeylElement(int rank, std::vector<Entry> matrix, Word word)
      : rank_(rank), matrix_(std::move(matrix)), word_(std::move(word)) {}

  int rank_ = 0;
  std::vector<Entry> matrix_;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Representatives W^I with I = S minus `excluded`.
struct CosetSpec {
  std::set<int> excluded;

  static CosetSpec maximal(int r) { return CosetSpec{{r}}; }
  /// Labels in I for a system of the given rank.
  std::vector<int> included(int rank) const;
};

// ---------------------------------------------------------------------------
// Operations

/// w(chi).
Weight apply(const WeylElement& w, const Weight& chi);
std::vector<long> apply(const WeylElement& w, std::span<const long> chi);

/// u * v.
WeylElement compose(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement simple_reflection(const RootSystem& rs, int label);
/// s_beta for the positive root at index `root_index` of rs.roots().
WeylElement root_reflection(const RootSystem& rs, std::size_t root_index);

/// |{beta in R+ : w(beta) < 0}|.
int length(const RootSystem& rs, const WeylElement& w);

/// All of W, each element once, breadth-first by length (lengths nondecreasing).
/// Throws EnumerationLimitError when |W| exceeds `limit`.
std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t limit = default_enumeration_limit());

/// Subgroup W_J generated by the listed simple reflections (same guard on |W|).
std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, std::span<const int> generators,
                                             std::uint64_t limit = default_enumeration_limit());

/// W^I: elements sending every simple root in I to a positive root. Generated
/// breadth-first inside W^I, lengths nondecreasing, identity first.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const CosetSpec& spec,
                                        std::uint64_t limit = default_enumeration_limit());

bool is_min_coset_rep(const WeylElement& w, const CosetSpec& spec);

/// Bruhat order via the left-descent recursion.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

/// Distinct products of all simple reflections, each used once. Rank <= 8.
std::vector<WeylElement> coxeter_elements(const RootSystem& rs);

inline constexpr int kMaxCoxeterRank = 8;

}  // namespace schubss
