#include "schubss/coxfeas.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace schubss {

FeasibilityProblem::FeasibilityProblem(const RootSystem& rs, const WeylElement& w) : n_(rs.rank()) {
  if (w.rank() != n_) throw UsageError("element rank does not match " + rs.name());
  for (int j = 0; j < n_; ++j) {
    LinearInequality row;
    for (int i = 0; i < n_; ++i) row.coeffs.emplace_back(rs.cartan0(i, j));
    rows_.push_back(std::move(row));
  }
  for (int j = 0; j < n_; ++j) {
    LinearInequality row;
    for (int k = 0; k < n_; ++k) row.coeffs.emplace_back(-w.entry(j, k));
    rows_.push_back(std::move(row));
  }
}

bool FeasibilityProblem::satisfied_by(std::span<const long> a) const {
  for (const auto& row : rows_) {
    long s = 0;
    for (int i = 0; i < n_; ++i) s += row.coeffs[static_cast<std::size_t>(i)].get_num().get_si() * a[static_cast<std::size_t>(i)];
    if (s < 0) return false;
  }
  return true;
}

InequalitySystem FeasibilityProblem::normalized_system() const {
  InequalitySystem sys(n_);
  for (const auto& row : rows_) sys.add(row);
  LinearInequality sum;
  sum.coeffs.assign(static_cast<std::size_t>(n_), Rational(1));
  sum.constant = -1;
  sys.add_equality(sum);
  return sys;
}

bool lemma41_filter(const RootSystem& rs, const WeylElement& w) {
  // D_3 is A_3 with the middle node labelled 1.
  const bool a3 = rs.rank() == 3 && (rs.kind() == Kind::A || rs.kind() == Kind::D);
  for (int label = 1; label <= rs.rank(); ++label) {
    if (!w.has_right_descent(label)) continue;
    const auto degree = rs.neighbors(label).size();
    if (degree > 2 || (degree == 2 && !a3)) return false;
  }
  return true;
}

Decision decide_admits(const RootSystem& rs, const WeylElement& w) {
  const FeasibilityProblem problem(rs, w);
  const auto x = problem.normalized_system().solve();
  if (!x) return {};
  Integer k = 1;
  for (const auto& q : *x) k = lcm(k, q.get_den());
  std::vector<Rational> coords;
  for (const auto& q : *x) coords.push_back(q * k);
  return {true, Weight(std::move(coords))};
}

std::optional<std::vector<long>> grid_search(const RootSystem& rs, const WeylElement& w, int bound) {
  const FeasibilityProblem problem(rs, w);
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<long> a(n, 0);
  while (true) {
    // Advance like an odometer, last coordinate fastest; skips a = 0.
    std::size_t i = n;
    while (i > 0 && a[i - 1] == bound) a[--i] = 0;
    if (i == 0) return std::nullopt;
    ++a[i - 1];
    if (problem.satisfied_by(a)) return a;
  }
}

std::string to_string(Expectation::Kind k) {
  switch (k) {
    case Expectation::Kind::biconditional: return "biconditional";
    case Expectation::Kind::necessity: return "necessity";
    case Expectation::Kind::uncovered: return "uncovered";
  }
  return "?";
}

namespace {

Word descending(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return w;
}

}  // namespace

std::vector<WeylElement> expected_pattern(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<WeylElement> out;
  switch (rs.kind()) {
    case Kind::A:
      if (n < 4) break;
      out.push_back(WeylElement::from_word(rs, descending(n)));
      for (int i = 1; i <= n - 1; ++i) {
        Word word;
        for (int j = i; j >= 1; --j) word.push_back(j);
        for (int j = i + 1; j <= n; ++j) word.push_back(j);
        out.push_back(WeylElement::from_word(rs, word));
      }
      break;
    case Kind::B:
    case Kind::C:
      if (n >= 3) out.push_back(WeylElement::from_word(rs, descending(n)));
      break;
    case Kind::D:
      if (n >= 5) out.push_back(WeylElement::from_word(rs, descending(n)));
      break;
    default: break;
  }
  return out;
}

Expectation expected_thm42(const RootSystem& rs, const WeylElement& w) {
  using K = Expectation::Kind;
  const int n = rs.rank();
  switch (rs.kind()) {
    case Kind::A:
      if (n == 3) return {K::biconditional, true, "A_3: every Coxeter element"};
      if (n < 3) return {K::uncovered, false, "A_" + std::to_string(n) + ": not addressed"};
      break;
    case Kind::B:
    case Kind::C:
      // C_2 is B_2 with the labels swapped.
      if (n == 2) return {K::biconditional, true, "B_2: every Coxeter element"};
      break;
    case Kind::D:
      // D_3 is A_3.
      if (n == 3) return {K::biconditional, true, "D_3 = A_3: every Coxeter element"};
      if (n == 4) return {K::biconditional, !w.has_right_descent(2), "D_4: l(w s_2) = l(w) + 1"};
      break;
    case Kind::E:
    case Kind::F:
    case Kind::G: return {K::biconditional, false, rs.name() + ": none"};
  }
  const auto pattern = expected_pattern(rs);
  const bool member = std::find(pattern.begin(), pattern.end(), w) != pattern.end();
  const std::string rule = rs.kind() == Kind::A ? "A_n, n >= 4: s_n...s_1 or s_i...s_1 s_{i+1}...s_n"
                                                 : std::string(1, to_char(rs.kind())) + "_n: s_n...s_1";
  return {K::necessity, member, rule};
}

CoxeterReport::CoxeterReport(const RootSystem& rs, WeylElement element, bool passes_lemma41, Decision decision,
                             Expectation expected)
    : element_(std::move(element)),
      passes_lemma41_(passes_lemma41),
      decision_(std::move(decision)),
      expected_(std::move(expected)) {
  if (decision_.admits != decision_.witness.has_value())
    throw InternalError("decision and witness are inconsistent");
  if (decision_.witness) {
    const Weight& chi = *decision_.witness;
    const std::string where = rs.name() + " " + to_string(element_.word());
    if (chi.is_zero() || !chi.is_integral()) throw InternalError(where + ": witness is zero or not integral");
    if (!rs.is_dominant(chi)) throw InternalError(where + ": witness is not dominant");
    const Weight image = apply(element_, chi);
    for (const auto& c : image.coords())
      if (c > 0) throw InternalError(where + ": w(witness) has a positive coordinate");
  }
  switch (expected_.kind) {
    case Expectation::Kind::biconditional: agreement_ = decision_.admits == expected_.admits; break;
    case Expectation::Kind::necessity: agreement_ = !decision_.admits || expected_.admits; break;
    case Expectation::Kind::uncovered: agreement_ = true; break;
  }
}

std::vector<CoxeterReport> classify_all(const RootSystem& rs, unsigned workers) {
  const std::vector<WeylElement> elements = coxeter_elements(rs);
  std::vector<std::optional<CoxeterReport>> slots(elements.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, elements.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < elements.size();) {
        const WeylElement& w = elements[i];
        slots[i].emplace(rs, w, lemma41_filter(rs, w), decide_admits(rs, w), expected_thm42(rs, w));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = elements.size();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CoxeterReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool cone_is_ray(const RootSystem& rs, const WeylElement& w, std::span<const long> direction) {
  const int n = rs.rank();
  if (static_cast<int>(direction.size()) != n) throw UsageError("direction has the wrong length");
  const long total = std::accumulate(direction.begin(), direction.end(), 0L);
  if (total <= 0) throw UsageError("direction must have positive coordinate sum");
  const InequalitySystem sys = FeasibilityProblem(rs, w).normalized_system();
  for (int i = 0; i < n; ++i) {
    const auto range = sys.range_of(i);
    Rational point(direction[static_cast<std::size_t>(i)], total);
    point.canonicalize();
    if (!range || !range->lower || !range->upper) return false;
    if (*range->lower != point || *range->upper != point) return false;
  }
  return true;
}

}  // namespace schubss
