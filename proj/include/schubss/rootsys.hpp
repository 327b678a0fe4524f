#pragma once

// Root data of the irreducible crystallographic types, Bourbaki labeling.
//
// Simple roots carry 1-based labels alpha_1 .. alpha_n throughout the public
// API. Storage is 0-based: coordinate i of a Weight is the coefficient of
// alpha_{i+1}.
//
// Cartan convention: cartan(i, j) = <alpha_i, alpha_j^vee>, so the pairing of a
// weight chi = sum a_i alpha_i with alpha_j^vee is sum_i a_i cartan(i, j), and
// the simple reflection s_j only changes coordinate j.

#include "schubss/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubss {

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Kind parse_kind(std::string_view text);
char to_char(Kind kind);

/// Exact weight in the simple-root basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Weight zero(int rank);
  static Weight simple_root(int rank, int label);
  /// Integer coordinates, e.g. Weight::of({1, 2, 1}) for alpha_1 + 2 alpha_2 + alpha_3.
  static Weight of(std::initializer_list<long> coords);
  static Weight of(std::span<const long> coords);

  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const Rational> coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  /// Coefficient of alpha_label (1-based).
  const Rational& coeff(int label) const;

  bool is_zero() const;
  bool is_integral() const;
  /// Least positive integer k with k * this integral.
  Integer clearing_factor() const;
  /// Coordinates of k * this; requires k * this integral.
  std::vector<long> scaled_integers(const Integer& k) const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  friend Weight operator*(const Rational& s, const Weight& w);

  bool operator==(const Weight& other) const = default;
  /// Lexicographic on coordinates.
  std::strong_ordering operator<=>(const Weight& other) const;

 private:
  std::vector<Rational> coords_;
};

/// Human-readable form, e.g. "-1/2·α_1 - 1/2·α_3"; "0" for the zero weight.
std::string to_string(const Weight& w);

/// A positive root together with its coroot, both as integer vectors in the
/// simple root / simple coroot bases.
struct RootDatum {
  std::vector<int> root;
  std::vector<int> coroot;
};

class RootSystem {
 public:
  static constexpr int kMaxRank = 32;

  /// Validates the kind/rank combination; throws UsageError naming the constraint.
  RootSystem(Kind kind, int rank);

  Kind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  /// "B4", "E8", ...
  std::string name() const;

  /// <alpha_i, alpha_j^vee>, 1-based labels.
  int cartan(int i, int j) const { return cartan_[idx(i - 1, j - 1)]; }
  /// 0-based access for inner loops.
  int cartan0(int i, int j) const noexcept { return cartan_[idx(i, j)]; }

  /// Labels adjacent to `label` in the Dynkin diagram.
  std::vector<int> neighbors(int label) const;

  /// <chi, alpha_j^vee>.
  Rational pairing(const Weight& chi, int j) const;
  /// <chi, beta^vee> for an arbitrary coroot given in the simple-coroot basis.
  Rational pairing_with_coroot(const Weight& chi, std::span<const int> coroot) const;
  bool is_dominant(const Weight& chi) const;

  /// Unique weight with pairing(., j) = delta_{rj}, by exact elimination.
  Weight fundamental_weight(int r) const;

  /// Positive roots with coroots, ordered by height then lexicographically.
  const std::vector<RootDatum>& roots() const noexcept { return roots_; }
  std::vector<Weight> positive_roots() const;
  /// Root of maximal height.
  Weight highest_root() const;

  /// s_j(chi) = chi - <chi, alpha_j^vee> alpha_j.
  Weight reflect(const Weight& chi, int j) const;

  /// |W| from the degrees of the type.
  std::uint64_t weyl_group_order() const;

  bool operator==(const RootSystem& other) const { return kind_ == other.kind_ && rank_ == other.rank_; }

 private:
  std::size_t idx(int i, int j) const noexcept { return static_cast<std::size_t>(i * rank_ + j); }
  void generate_roots();

  Kind kind_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<RootDatum> roots_;
};

}  // namespace schubss
