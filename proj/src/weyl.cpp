#include "schubss/weyl.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace schubss {

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) out << (k ? " " : "") << "s" << word[k];
  return out.str();
}

std::uint64_t default_enumeration_limit() {
  const char* env = std::getenv("SCHUBSS_ENUM_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  std::string_view s(env);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw UsageError("SCHUBSS_ENUM_LIMIT must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

namespace {

using Entry = WeylElement::Entry;
using Matrix = std::vector<Entry>;

std::string_view key_of(const Matrix& m) {
  return {reinterpret_cast<const char*>(m.data()), m.size()};
}

Entry narrow(int x) {
  if (x < -127 || x > 127) throw InternalError("Weyl matrix entry out of range");
  return static_cast<Entry>(x);
}

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

bool column_negative(const Matrix& m, int n, int col) {
  for (int row = 0; row < n; ++row) {
    Entry x = m[static_cast<std::size_t>(row * n + col)];
    if (x != 0) return x < 0;
  }
  return false;
}

// m := m * s_j (0-based j): column k <- col_k - c(k, j) col_j.
void right_multiply(const RootSystem& rs, Matrix& m, int j) {
  const int n = rs.rank();
  for (int row = 0; row < n; ++row) {
    const int cj = m[static_cast<std::size_t>(row * n + j)];
    if (cj == 0) continue;
    for (int k = 0; k < n; ++k) {
      const int c = rs.cartan0(k, j);
      if (c == 0) continue;
      auto& e = m[static_cast<std::size_t>(row * n + k)];
      e = narrow(e - c * cj);
    }
  }
}

// s_j * m: only row j changes.
void left_multiply(const RootSystem& rs, Matrix& m, int j) {
  const int n = rs.rank();
  for (int col = 0; col < n; ++col) {
    int s = 0;
    for (int k = 0; k < n; ++k) s += m[static_cast<std::size_t>(k * n + col)] * rs.cartan0(k, j);
    auto& e = m[static_cast<std::size_t>(j * n + col)];
    e = narrow(e - s);
  }
}

Matrix matrix_of_word(const RootSystem& rs, std::span<const int> word) {
  Matrix m = identity_matrix(rs.rank());
  for (int label : word) {
    if (label < 1 || label > rs.rank())
      throw UsageError("reflection label " + std::to_string(label) + " out of range for " + rs.name());
    right_multiply(rs, m, label - 1);
  }
  return m;
}

// Reduced word by peeling off the smallest right descent until the identity.
Word reduced_word(const RootSystem& rs, Matrix m) {
  const int n = rs.rank();
  const Matrix id = identity_matrix(n);
  Word reversed;
  while (m != id) {
    int j = 0;
    while (j < n && !column_negative(m, n, j)) ++j;
    if (j == n) throw InternalError("non-identity Weyl element without right descent");
    right_multiply(rs, m, j);
    reversed.push_back(j + 1);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

void check_rank(const RootSystem& rs, const WeylElement& w) {
  if (w.rank() != rs.rank()) throw UsageError("Weyl element rank does not match " + rs.name());
}

bool in_coset_reps(const Matrix& m, int n, std::span<const int> included) {
  for (int label : included)
    if (column_negative(m, n, label - 1)) return false;
  return true;
}

void enforce_limit(const RootSystem& rs, std::uint64_t limit) {
  const std::uint64_t order = rs.weyl_group_order();
  if (order > limit) throw EnumerationLimitError(order, limit);
}

}  // namespace

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(int rank) : rank_(rank), matrix_(identity_matrix(rank)) {}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  Matrix m = matrix_of_word(rs, word);
  Word w = reduced_word(rs, m);
  return WeylElement(rs.rank(), std::move(m), std::move(w));
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, std::vector<Entry> matrix) {
  if (matrix.size() != static_cast<std::size_t>(rs.rank() * rs.rank()))
    throw UsageError("matrix size does not match " + rs.name());
  Word w = reduced_word(rs, matrix);
  if (matrix_of_word(rs, w) != matrix) throw UsageError("matrix is not a Weyl group element of " + rs.name());
  return WeylElement(rs.rank(), std::move(matrix), std::move(w));
}

bool WeylElement::is_identity() const { return word_.empty(); }

bool WeylElement::has_right_descent(int label) const { return column_negative(matrix_, rank_, label - 1); }

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  return std::hash<std::string_view>{}(key_of(w.matrix()));
}

std::vector<int> CosetSpec::included(int rank) const {
  std::vector<int> out;
  for (int j = 1; j <= rank; ++j)
    if (!excluded.contains(j)) out.push_back(j);
  return out;
}

// ---------------------------------------------------------------------------
// Operations

Weight apply(const WeylElement& w, const Weight& chi) {
  if (chi.rank() != w.rank()) throw UsageError("weight rank does not match Weyl element");
  const int n = w.rank();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k < n; ++k) {
      int e = w.entry(row, k);
      if (e != 0) out[static_cast<std::size_t>(row)] += e * chi[static_cast<std::size_t>(k)];
    }
  return Weight(std::move(out));
}

std::vector<long> apply(const WeylElement& w, std::span<const long> chi) {
  const int n = w.rank();
  if (chi.size() != static_cast<std::size_t>(n)) throw UsageError("weight rank does not match Weyl element");
  std::vector<long> out(static_cast<std::size_t>(n), 0);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(row)] += w.entry(row, k) * chi[static_cast<std::size_t>(k)];
  return out;
}

WeylElement compose(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  check_rank(rs, u);
  check_rank(rs, v);
  const int n = rs.rank();
  Matrix m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += u.entry(i, k) * v.entry(k, j);
      m[static_cast<std::size_t>(i * n + j)] = narrow(s);
    }
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  check_rank(rs, w);
  Word rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, rev);
}

WeylElement simple_reflection(const RootSystem& rs, int label) {
  const int word[] = {label};
  return WeylElement::from_word(rs, word);
}

WeylElement root_reflection(const RootSystem& rs, std::size_t root_index) {
  const RootDatum& beta = rs.roots().at(root_index);
  const int n = rs.rank();
  Matrix m = identity_matrix(n);
  for (int k = 0; k < n; ++k) {
    int p = 0;  // <alpha_k, beta^vee>
    for (int j = 0; j < n; ++j) p += beta.coroot[static_cast<std::size_t>(j)] * rs.cartan0(k, j);
    for (int row = 0; row < n; ++row) {
      auto& e = m[static_cast<std::size_t>(row * n + k)];
      e = narrow(e - p * beta.root[static_cast<std::size_t>(row)]);
    }
  }
  return WeylElement::from_matrix(rs, std::move(m));
}

int length(const RootSystem& rs, const WeylElement& w) {
  check_rank(rs, w);
  const int n = rs.rank();
  int count = 0;
  for (const auto& d : rs.roots()) {
    for (int row = 0; row < n; ++row) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += w.entry(row, k) * d.root[static_cast<std::size_t>(k)];
      if (s != 0) {
        count += s < 0;
        break;
      }
    }
  }
  return count;
}

class WeylEngine {
 public:
  enum class Side { left, right };

  // Breadth-first search by multiplication on one side; `allowed` restricts the
  // generators and `accept` filters which elements are kept and extended.
  // Elements are only reached from a shorter neighbour, so levels are lengths.
  template <class Accept>
  static std::vector<WeylElement> bfs(const RootSystem& rs, std::span<const int> allowed, Side side, Accept accept) {
    const int n = rs.rank();
    std::vector<WeylElement> out;
    std::unordered_set<std::string_view> seen;
    out.push_back(WeylElement(n));
    seen.insert(key_of(out.back().matrix_));
    std::size_t level_begin = 0;
    while (level_begin < out.size()) {
      const std::size_t level_end = out.size();
      for (std::size_t idx = level_begin; idx < level_end; ++idx) {
        for (int label : allowed) {
          const int j = label - 1;
          Matrix m = out[idx].matrix_;
          Word word;
          if (side == Side::right) {
            if (column_negative(m, n, j)) continue;
            right_multiply(rs, m, j);
            word = out[idx].word_;
            word.push_back(label);
          } else {
            left_multiply(rs, m, j);
            word.reserve(out[idx].word_.size() + 1);
            word.push_back(label);
            word.insert(word.end(), out[idx].word_.begin(), out[idx].word_.end());
          }
          if (seen.contains(key_of(m)) || !accept(m)) continue;
          out.push_back(WeylElement(n, std::move(m), std::move(word)));
          seen.insert(key_of(out.back().matrix_));
        }
      }
      level_begin = level_end;
    }
    return out;
  }

  static WeylElement make(int n, Matrix m, Word w) { return WeylElement(n, std::move(m), std::move(w)); }
};

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t limit) {
  enforce_limit(rs, limit);
  std::vector<int> all(static_cast<std::size_t>(rs.rank()));
  std::iota(all.begin(), all.end(), 1);
  auto out = WeylEngine::bfs(rs, all, WeylEngine::Side::right, [](const Matrix&) { return true; });
  if (out.size() != rs.weyl_group_order()) throw InternalError("enumerated |W| disagrees with the type's order");
  return out;
}

std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, std::span<const int> generators,
                                             std::uint64_t limit) {
  enforce_limit(rs, limit);
  for (int g : generators)
    if (g < 1 || g > rs.rank()) throw UsageError("generator label out of range");
  return WeylEngine::bfs(rs, generators, WeylEngine::Side::right, [](const Matrix&) { return true; });
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const CosetSpec& spec, std::uint64_t limit) {
  enforce_limit(rs, limit);
  for (int e : spec.excluded)
    if (e < 1 || e > rs.rank()) throw UsageError("coset label " + std::to_string(e) + " out of range");
  const int n = rs.rank();
  const std::vector<int> included = spec.included(n);
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return WeylEngine::bfs(rs, all, WeylEngine::Side::left, [&](const Matrix& m) { return in_coset_reps(m, n, included); });
}

bool is_min_coset_rep(const WeylElement& w, const CosetSpec& spec) {
  return in_coset_reps(w.matrix(), w.rank(), spec.included(w.rank()));
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  check_rank(rs, u);
  check_rank(rs, w);
  int lu = u.word_length();
  int lw = w.word_length();
  if (lu > lw) return false;
  // Track u^{-1}: s_i is a left descent of u iff u^{-1}(alpha_i) < 0, and
  // replacing u by s_i u replaces u^{-1} by u^{-1} s_i.
  Matrix uinv = inverse(rs, u).matrix();
  const int n = rs.rank();
  for (int label : w.word()) {  // the first remaining letter is a left descent of what is left of w
    if (lu == 0) return true;
    if (lu > lw) return false;
    if (column_negative(uinv, n, label - 1)) {
      right_multiply(rs, uinv, label - 1);
      --lu;
    }
    --lw;
  }
  return lu == 0;
}

std::vector<WeylElement> coxeter_elements(const RootSystem& rs) {
  const int n = rs.rank();
  if (n > kMaxCoxeterRank)
    throw UsageError("Coxeter element enumeration supports rank <= " + std::to_string(kMaxCoxeterRank));
  Word perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeylElement> out;
  std::unordered_set<std::string_view> seen;
  do {
    Matrix m = matrix_of_word(rs, perm);
    if (seen.contains(key_of(m))) continue;
    out.push_back(WeylEngine::make(n, std::move(m), perm));
    seen.insert(key_of(out.back().matrix()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace schubss
