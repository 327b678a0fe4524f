#include "schubss/fourier_motzkin.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace schubss {

Rational LinearInequality::evaluate(const std::vector<Rational>& x) const {
  Rational s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
  return s;
}

void InequalitySystem::add(LinearInequality row) {
  if (static_cast<int>(row.coeffs.size()) != variables_)
    throw UsageError("inequality has " + std::to_string(row.coeffs.size()) + " coefficients, expected " +
                     std::to_string(variables_));
  rows_.push_back(std::move(row));
}

void InequalitySystem::add_equality(const LinearInequality& row) {
  add(row);
  LinearInequality neg = row;
  for (auto& c : neg.coeffs) c = -c;
  neg.constant = -neg.constant;
  add(std::move(neg));
}

namespace {

// A derived row together with the set of input rows it was combined from.
struct Row {
  LinearInequality ineq;
  std::uint64_t history = 0;
};
using Rows = std::vector<Row>;

// Scale so the first nonzero coefficient has absolute value 1; positive
// multiples describe the same half-space, which lets duplicates collapse.
LinearInequality normalized(LinearInequality row) {
  Rational pivot = 0;
  for (const auto& c : row.coeffs)
    if (c != 0) {
      pivot = abs(c);
      break;
    }
  if (pivot == 0) pivot = row.constant == 0 ? Rational(1) : Rational(abs(row.constant));
  for (auto& c : row.coeffs) c /= pivot;
  row.constant /= pivot;
  return row;
}

struct IneqLess {
  bool operator()(const LinearInequality& a, const LinearInequality& b) const {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.constant < b.constant;
  }
};

// Drops duplicates, trivially true rows and rows that Chernikov's rule marks
// redundant after `eliminated` steps: more than eliminated + 1 ancestors, or
// ancestors strictly containing those of another row. Returns false if some
// row reads 0 >= c with c < 0.
bool tidy(Rows& rows, int eliminated) {
  std::map<LinearInequality, std::uint64_t, IneqLess> unique;
  for (auto& row : rows) {
    const auto& c = row.ineq.coeffs;
    if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) {
      if (row.ineq.constant < 0) return false;
      continue;
    }
    if (std::popcount(row.history) > eliminated + 1) continue;
    auto [it, inserted] = unique.emplace(normalized(std::move(row.ineq)), row.history);
    if (!inserted && std::popcount(row.history) < std::popcount(it->second)) it->second = row.history;
  }
  Rows out;
  for (auto& [ineq, history] : unique) out.push_back({ineq, history});
  std::vector<bool> drop(out.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      const auto hi = out[i].history, hj = out[j].history;
      if ((hi & hj) == hj && hi != hj) drop[i] = true;
    }
  rows.clear();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!drop[i]) rows.push_back(std::move(out[i]));
  return true;
}

Rows eliminate(const Rows& rows, std::size_t var) {
  Rows keep, pos, neg;
  for (const auto& row : rows) {
    const Rational& c = row.ineq.coeffs[var];
    if (c > 0)
      pos.push_back(row);
    else if (c < 0)
      neg.push_back(row);
    else
      keep.push_back(row);
  }
  for (const auto& p : pos)
    for (const auto& q : neg) {
      // p_v > 0 > q_v: (-q_v) p + p_v q has zero coefficient at var.
      const Rational sp = -q.ineq.coeffs[var];
      const Rational sq = p.ineq.coeffs[var];
      Row comb;
      comb.ineq.coeffs.resize(p.ineq.coeffs.size());
      for (std::size_t i = 0; i < p.ineq.coeffs.size(); ++i)
        comb.ineq.coeffs[i] = sp * p.ineq.coeffs[i] + sq * q.ineq.coeffs[i];
      comb.ineq.coeffs[var] = 0;
      comb.ineq.constant = sp * p.ineq.constant + sq * q.ineq.constant;
      comb.history = p.history | q.history;
      keep.push_back(std::move(comb));
    }
  return keep;
}

// Variable whose elimination creates the fewest rows.
std::size_t cheapest(const Rows& rows, const std::vector<std::size_t>& candidates) {
  std::size_t best = candidates.front();
  long best_cost = 0;
  bool first = true;
  for (std::size_t v : candidates) {
    long pos = 0, neg = 0;
    for (const auto& row : rows) {
      pos += row.ineq.coeffs[v] > 0;
      neg += row.ineq.coeffs[v] < 0;
    }
    const long cost = pos * neg - pos - neg;
    if (first || cost < best_cost) {
      best = v;
      best_cost = cost;
      first = false;
    }
  }
  return best;
}

// Bounds on x_var from rows whose other variables are fixed by `x`.
Interval bounds(const Rows& rows, std::size_t var, const std::vector<Rational>& x) {
  Interval iv;
  for (const auto& row : rows) {
    const Rational& c = row.ineq.coeffs[var];
    if (c == 0) continue;
    Rational rest = row.ineq.constant;
    for (std::size_t i = 0; i < row.ineq.coeffs.size(); ++i)
      if (i != var) rest += row.ineq.coeffs[i] * x[i];
    const Rational b = -rest / c;
    if (c > 0) {
      if (!iv.lower || b > *iv.lower) iv.lower = b;
    } else {
      if (!iv.upper || b < *iv.upper) iv.upper = b;
    }
  }
  return iv;
}

struct Elimination {
  std::vector<std::size_t> order;  // variables in the order they were eliminated
  std::vector<Rows> stages;        // stages[k]: rows before eliminating order[k]; back() is the last
};

std::optional<Elimination> run(const std::vector<LinearInequality>& input, std::vector<std::size_t> targets) {
  if (input.size() > 64) throw UsageError("Fourier-Motzkin supports at most 64 input rows");
  Rows rows;
  for (std::size_t i = 0; i < input.size(); ++i) rows.push_back({input[i], std::uint64_t{1} << i});
  Elimination e;
  if (!tidy(rows, 0)) return std::nullopt;
  while (!targets.empty()) {
    const std::size_t var = cheapest(rows, targets);
    targets.erase(std::find(targets.begin(), targets.end(), var));
    e.order.push_back(var);
    e.stages.push_back(rows);
    rows = eliminate(rows, var);
    if (!tidy(rows, static_cast<int>(e.order.size()))) return std::nullopt;
  }
  e.stages.push_back(std::move(rows));
  return e;
}

}  // namespace

std::optional<std::vector<Rational>> InequalitySystem::solve() const {
  const auto n = static_cast<std::size_t>(variables_);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  auto e = run(rows_, all);
  if (!e) return std::nullopt;

  // Back-substitute: the last eliminated variable is fixed first.
  std::vector<Rational> x(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t var = e->order[k];
    const Interval iv = bounds(e->stages[k], var, x);
    if (iv.lower && iv.upper && *iv.lower > *iv.upper) throw InternalError("Fourier-Motzkin back-substitution failed");
    x[var] = iv.lower ? *iv.lower : iv.upper ? *iv.upper : Rational(0);
  }
  for (const auto& row : rows_)
    if (!row.satisfied_by(x)) throw InternalError("Fourier-Motzkin solution violates an input row");
  return x;
}

std::optional<Interval> InequalitySystem::range_of(int var) const {
  if (var < 0 || var >= variables_) throw UsageError("variable index out of range");
  const auto n = static_cast<std::size_t>(variables_);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != static_cast<std::size_t>(var)) others.push_back(i);
  auto e = run(rows_, others);
  if (!e) return std::nullopt;
  const std::vector<Rational> x(n, 0);  // only x_var remains
  Interval iv = bounds(e->stages.back(), static_cast<std::size_t>(var), x);
  if (iv.lower && iv.upper && *iv.lower > *iv.upper) return std::nullopt;
  return iv;
}

}  // namespace schubss
