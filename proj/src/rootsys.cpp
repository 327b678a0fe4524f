#include "schubss/rootsys.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace schubss {

Kind parse_kind(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Kind::A;
      case 'B': return Kind::B;
      case 'C': return Kind::C;
      case 'D': return Kind::D;
      case 'E': return Kind::E;
      case 'F': return Kind::F;
      case 'G': return Kind::G;
      default: break;
    }
  }
  throw UsageError("unknown root system type '" + std::string(text) + "' (expected one of A B C D E F G)");
}

char to_char(Kind kind) { return static_cast<char>(kind); }

// ---------------------------------------------------------------------------
// Weight

Weight Weight::zero(int rank) { return Weight(std::vector<Rational>(static_cast<std::size_t>(rank))); }

Weight Weight::simple_root(int rank, int label) {
  Weight w = zero(rank);
  w.coords_.at(static_cast<std::size_t>(label - 1)) = 1;
  return w;
}

Weight Weight::of(std::initializer_list<long> coords) {
  return of(std::span<const long>(coords.begin(), coords.size()));
}

Weight Weight::of(std::span<const long> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long x : coords) c.emplace_back(x);
  return Weight(std::move(c));
}

const Rational& Weight::coeff(int label) const { return coords_.at(static_cast<std::size_t>(label - 1)); }

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Integer Weight::clearing_factor() const {
  Integer k = 1;
  for (const auto& q : coords_) k = lcm(k, q.get_den());
  return k;
}

std::vector<long> Weight::scaled_integers(const Integer& k) const {
  std::vector<long> out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) {
    Rational s = q * Rational(k);
    if (s.get_den() != 1 || !s.get_num().fits_slong_p())
      throw InternalError("scaled weight coordinate is not a machine integer");
    out.push_back(s.get_num().get_si());
  }
  return out;
}

Weight Weight::operator+(const Weight& other) const {
  Weight r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += other.coords_.at(i);
  return r;
}

Weight Weight::operator-(const Weight& other) const {
  Weight r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= other.coords_.at(i);
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& q : r.coords_) q = -q;
  return r;
}

Weight operator*(const Rational& s, const Weight& w) {
  Weight r = w;
  for (auto& q : r.coords_) q *= s;
  return r;
}

std::strong_ordering Weight::operator<=>(const Weight& other) const {
  const std::size_t n = std::min(coords_.size(), other.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(coords_[i], other.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return coords_.size() <=> other.coords_.size();
}

std::string to_string(const Weight& w) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < w.rank(); ++i) {
    const Rational& q = w[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      out << (q < 0 ? "-" : "") << mag.get_str();
    } else {
      out << (q < 0 ? " - " : " + ") << mag.get_str();
    }
    out << "·α_" << i + 1;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

}  // namespace

RootSystem::RootSystem(Kind kind, int rank) : kind_(kind), rank_(rank) {
  require(rank >= 1, "rank must be positive");
  require(rank <= kMaxRank, "rank " + std::to_string(rank) + " exceeds the supported maximum " +
                                std::to_string(kMaxRank));
  const std::string tag = std::string(1, to_char(kind)) + std::to_string(rank);
  switch (kind) {
    case Kind::A: break;
    case Kind::B:
    case Kind::C: require(rank >= 2, tag + ": type " + to_char(kind) + " needs rank >= 2"); break;
    case Kind::D: require(rank >= 3, tag + ": type D needs rank >= 3"); break;
    case Kind::E: require(rank >= 6 && rank <= 8, tag + ": type E needs rank 6, 7 or 8"); break;
    case Kind::F: require(rank == 4, tag + ": type F needs rank 4"); break;
    case Kind::G: require(rank == 2, tag + ": type G needs rank 2"); break;
  }

  const int n = rank;
  cartan_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) cartan_[idx(i, i)] = 2;
  auto bond = [&](int i, int j) {  // 1-based, simply laced
    cartan_[idx(i - 1, j - 1)] = -1;
    cartan_[idx(j - 1, i - 1)] = -1;
  };
  switch (kind) {
    case Kind::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Kind::B:  // alpha_n short
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      cartan_[idx(n - 2, n - 1)] = -2;
      break;
    case Kind::C:  // alpha_n long
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      cartan_[idx(n - 1, n - 2)] = -2;
      break;
    case Kind::D:  // fork: alpha_{n-1}, alpha_n both attached to alpha_{n-2}
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Kind::E:  // 1-3-4-5-6-7-8 with 2 attached to 4
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Kind::F:  // 1-2=>3-4, alpha_1, alpha_2 long
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      cartan_[idx(1, 2)] = -2;
      break;
    case Kind::G:  // alpha_1 short
      cartan_[idx(0, 1)] = -1;
      cartan_[idx(1, 0)] = -3;
      break;
  }
  generate_roots();
}

std::string RootSystem::name() const { return std::string(1, to_char(kind_)) + std::to_string(rank_); }

std::vector<int> RootSystem::neighbors(int label) const {
  std::vector<int> out;
  for (int j = 1; j <= rank_; ++j)
    if (j != label && cartan(label, j) != 0) out.push_back(j);
  return out;
}

Rational RootSystem::pairing(const Weight& chi, int j) const {
  if (j < 1 || j > rank_) throw UsageError("simple root index " + std::to_string(j) + " out of range");
  if (chi.rank() != rank_) throw UsageError("weight rank does not match root system");
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) s += chi[static_cast<std::size_t>(i)] * cartan0(i, j - 1);
  return s;
}

Rational RootSystem::pairing_with_coroot(const Weight& chi, std::span<const int> coroot) const {
  Rational s = 0;
  for (int k = 0; k < rank_; ++k) {
    if (coroot[static_cast<std::size_t>(k)] == 0) continue;
    s += coroot[static_cast<std::size_t>(k)] * pairing(chi, k + 1);
  }
  return s;
}

bool RootSystem::is_dominant(const Weight& chi) const {
  for (int j = 1; j <= rank_; ++j)
    if (pairing(chi, j) < 0) return false;
  return true;
}

Weight RootSystem::fundamental_weight(int r) const {
  if (r < 1 || r > rank_) throw UsageError("fundamental weight index " + std::to_string(r) + " out of range");
  // Solve sum_i x_i cartan(i, j) = delta_{rj}: augmented rows are indexed by j.
  const int n = rank_;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a[j][i] = cartan0(i, j);
    a[j][n] = (j == r - 1) ? 1 : 0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    std::swap(a[col], a[piv]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (int k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return Weight(std::move(x));
}

void RootSystem::generate_roots() {
  const int n = rank_;
  // Reflect from the simple roots, carrying the coroot along; a root is new
  // iff its integer vector has not been seen.
  std::map<std::vector<int>, std::vector<int>> seen;
  std::vector<RootDatum> frontier;
  for (int i = 0; i < n; ++i) {
    RootDatum d{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    d.root[i] = 1;
    d.coroot[i] = 1;
    seen.emplace(d.root, d.coroot);
    frontier.push_back(std::move(d));
  }
  while (!frontier.empty()) {
    std::vector<RootDatum> next;
    for (const auto& d : frontier) {
      for (int j = 0; j < n; ++j) {
        int p = 0;  // <beta, alpha_j^vee>
        int q = 0;  // <alpha_j, beta^vee>
        for (int k = 0; k < n; ++k) {
          p += d.root[k] * cartan0(k, j);
          q += d.coroot[k] * cartan0(j, k);
        }
        if (p == 0) continue;
        RootDatum e = d;
        e.root[j] -= p;
        e.coroot[j] -= q;
        if (std::any_of(e.root.begin(), e.root.end(), [](int x) { return x < 0; })) continue;
        if (seen.emplace(e.root, e.coroot).second) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  roots_.clear();
  for (auto& [root, coroot] : seen) roots_.push_back({root, coroot});
  auto height = [](const RootDatum& d) {
    int h = 0;
    for (int x : d.root) h += x;
    return h;
  };
  std::stable_sort(roots_.begin(), roots_.end(),
                   [&](const RootDatum& a, const RootDatum& b) { return height(a) < height(b); });
}

std::vector<Weight> RootSystem::positive_roots() const {
  std::vector<Weight> out;
  out.reserve(roots_.size());
  for (const auto& d : roots_) {
    std::vector<long> v(d.root.begin(), d.root.end());
    out.push_back(Weight::of(v));
  }
  return out;
}

Weight RootSystem::highest_root() const {
  std::vector<long> v(roots_.back().root.begin(), roots_.back().root.end());
  return Weight::of(v);
}

Weight RootSystem::reflect(const Weight& chi, int j) const {
  Rational p = pairing(chi, j);
  std::vector<Rational> c(chi.coords().begin(), chi.coords().end());
  c[static_cast<std::size_t>(j - 1)] -= p;
  return Weight(std::move(c));
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = rank_;
  auto guard = [&](int k) {
    if (k > 20) throw UsageError(name() + ": Weyl group order overflows 64 bits");
  };
  switch (kind_) {
    case Kind::A: guard(n + 1); return factorial(n + 1);
    case Kind::B:
    case Kind::C: guard(n); return (std::uint64_t{1} << n) * factorial(n);
    case Kind::D: guard(n); return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Kind::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Kind::F: return 1152;
    case Kind::G: return 12;
  }
  return 0;
}

}  // namespace schubss
