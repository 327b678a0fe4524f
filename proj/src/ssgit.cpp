#include "schubss/ssgit.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace schubss {

// ---------------------------------------------------------------------------
// Index tuples

IndexTuple::IndexTuple(std::vector<int> entries, int q) : entries_(std::move(entries)), q_(q) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 1 || entries_[k] > q)
      throw UsageError("index tuple entry " + std::to_string(entries_[k]) + " outside 1.." + std::to_string(q));
    if (k > 0 && entries_[k] - entries_[k - 1] < 2) throw UsageError("index tuple entries must differ by at least 2");
  }
}

std::vector<IndexTuple> index_tuples(int p, int q) {
  std::vector<IndexTuple> out;
  if (p < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next_min) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.emplace_back(cur, q);
      return;
    }
    for (int v = next_min; v <= q; ++v) {
      cur.push_back(v);
      self(self, v + 2);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion

bool is_nonpositive(const Weight& chi) {
  return std::all_of(chi.coords().begin(), chi.coords().end(), [](const Rational& q) { return q <= 0; });
}

bool is_nonnegative(const Weight& chi) {
  return std::all_of(chi.coords().begin(), chi.coords().end(), [](const Rational& q) { return q >= 0; });
}

std::vector<int> support(const Weight& chi) {
  std::vector<int> out;
  for (int i = 0; i < chi.rank(); ++i)
    if (chi[static_cast<std::size_t>(i)] != 0) out.push_back(i + 1);
  return out;
}

bool admits_semistable(const RootSystem& rs, const WeylElement& w, const Weight& chi, const Integer& clearing_factor) {
  using Reason = PreconditionError::Reason;
  if (chi.rank() != rs.rank() || w.rank() != rs.rank())
    throw PreconditionError(Reason::rank_mismatch, "rank mismatch with " + rs.name());
  if (!rs.is_dominant(chi)) throw PreconditionError(Reason::non_dominant, "weight " + to_string(chi) + " is not dominant");
  if (!(Rational(clearing_factor) * chi).is_integral())
    throw PreconditionError(Reason::not_in_root_lattice,
                            "weight " + to_string(chi) + " times " + clearing_factor.get_str() + " is not in the root lattice");
  // Supp of chi in the fundamental-weight basis: the labels with nonzero pairing.
  CosetSpec spec;
  for (int j = 1; j <= rs.rank(); ++j)
    if (rs.pairing(chi, j) != 0) spec.excluded.insert(j);
  if (!is_min_coset_rep(w, spec))
    throw PreconditionError(Reason::not_min_coset_rep,
                            "element " + to_string(w.word()) + " is not a minimal coset representative");
  return is_nonpositive(apply(w, chi));
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

void check_r(const RootSystem& rs, int r) {
  if (r < 1 || r > rs.rank())
    throw UsageError("r = " + std::to_string(r) + " outside 1.." + std::to_string(rs.rank()) + " for " + rs.name());
}

void sort_elements(std::vector<AdmittingElement>& v) {
  std::sort(v.begin(), v.end(), [](const AdmittingElement& a, const AdmittingElement& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.element.word() < b.element.word();
  });
}

bool all_nonpositive(std::span<const long> v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; });
}

}  // namespace

std::vector<AdmittingElement> admitting_elements(const RootSystem& rs, int r, std::uint64_t limit) {
  check_r(rs, r);
  const Weight varpi = rs.fundamental_weight(r);
  const Integer k = varpi.clearing_factor();
  const std::vector<long> scaled = varpi.scaled_integers(k);
  const Rational inv_k = 1 / Rational(k);
  std::vector<AdmittingElement> out;
  for (auto& w : min_coset_reps(rs, CosetSpec::maximal(r), limit)) {
    auto image = schubss::apply(w, std::span<const long>(scaled));
    if (!all_nonpositive(image)) continue;
    Weight weight = inv_k * Weight::of(image);
    out.push_back({std::move(w), std::move(weight)});
  }
  return out;
}

std::vector<AdmittingElement> minimal_admitting(const RootSystem& rs, int r, MinimalityFilter filter,
                                                std::uint64_t limit) {
  std::vector<AdmittingElement> admitting = admitting_elements(rs, r, limit);
  std::vector<AdmittingElement> out;

  if (filter == MinimalityFilter::global) {
    for (const auto& w : admitting) {
      bool minimal = true;
      for (const auto& u : admitting) {
        if (u.element.word_length() >= w.element.word_length()) continue;
        if (bruhat_leq(rs, u.element, w.element)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(w);
    }
  } else {
    std::unordered_set<WeylElement, WeylElementHash> members;
    for (const auto& a : admitting) members.insert(a.element);
    std::vector<WeylElement> reflections;
    for (std::size_t b = 0; b < rs.roots().size(); ++b) reflections.push_back(root_reflection(rs, b));
    const CosetSpec spec = CosetSpec::maximal(r);
    for (const auto& w : admitting) {
      const int lw = length(rs, w.element);
      bool minimal = true;
      for (const auto& sb : reflections) {
        WeylElement x = compose(rs, sb, w.element);
        if (length(rs, x) != lw - 1 || !is_min_coset_rep(x, spec)) continue;
        if (members.contains(x)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(w);
    }
  }
  sort_elements(out);
  return out;
}

std::vector<AdmittingElement> minimal_admitting_oracle(const RootSystem& rs, int r, std::uint64_t limit) {
  auto global = minimal_admitting(rs, r, MinimalityFilter::global, limit);
  auto local = minimal_admitting(rs, r, MinimalityFilter::local, limit);
  bool same = global.size() == local.size();
  for (std::size_t i = 0; same && i < global.size(); ++i) same = global[i].element == local[i].element;
  if (!same)
    throw InternalError("global and local minimality filters disagree for " + rs.name() + ", r = " + std::to_string(r));
  return global;
}

// ---------------------------------------------------------------------------
// Closed forms

Word b_last_node_word(int n) {
  // w_m ... w_1 with w_i = s_{2i-1} ... s_n, m = ceil(n/2).
  Word word;
  const int m = (n + 1) / 2;
  for (int i = m; i >= 1; --i)
    for (int j = 2 * i - 1; j <= n; ++j) word.push_back(j);
  return word;
}

Word spin_case_word(int n, int r) {
  const int m = (n - 1) / 2;
  Word word;
  for (int i = m + 1; i >= 1; --i) {
    for (int j = 2 * i - 1; j <= n - 2; ++j) word.push_back(j);
    const bool odd = i % 2 == 1;
    if (r == n - 1)
      word.push_back(odd ? n - 1 : n);
    else
      word.push_back(odd ? n : n - 1);
  }
  return word;
}

std::vector<long> spin_case_scaled_weight(int n, int r) {
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= (n - 1) / 2; ++i) v[static_cast<std::size_t>(2 * i - 2)] -= 2;
  auto sub = [&](int label, long c) { v[static_cast<std::size_t>(label - 1)] -= c; };
  // Roles of alpha_{n-1} and alpha_n swap between r = n-1 and r = n.
  const int a = r == n - 1 ? n - 1 : n;
  const int b = r == n - 1 ? n : n - 1;
  switch (n % 4) {
    case 0: sub(b, 2); break;
    case 2: sub(a, 2); break;
    case 1: sub(a, 3); sub(b, 1); break;
    case 3: sub(a, 1); sub(b, 3); break;
  }
  return v;
}

namespace {

Weight tuple_weight(int rank, const IndexTuple& t, const std::map<int, Rational>& tail) {
  Weight w = Weight::zero(rank);
  std::vector<Rational> c(w.coords().begin(), w.coords().end());
  for (int i : t.entries()) c[static_cast<std::size_t>(i - 1)] -= 1;
  for (const auto& [label, q] : tail) c[static_cast<std::size_t>(label - 1)] -= q;
  return Weight(std::move(c));
}

void set_word(const RootSystem& rs, ClosedForm& cf, int r, Word word) {
  const Weight varpi = rs.fundamental_weight(r);
  const WeylElement w = WeylElement::from_word(rs, word);
  const Weight image = apply(w, Rational(cf.scale) * varpi);
  if (cf.weights.size() != 1 || image != Rational(cf.scale) * cf.weights.front())
    throw InternalError("explicit element for " + rs.name() + ", r = " + std::to_string(r) +
                        " does not reproduce the stated weight");
  cf.word = std::move(word);
}

Word descending(int n) {
  Word w;
  for (int j = n; j >= 1; --j) w.push_back(j);
  return w;
}

}  // namespace

ClosedForm closed_form_minimal_weights(const RootSystem& rs, int r) {
  check_r(rs, r);
  const int n = rs.rank();
  ClosedForm cf;
  cf.scale = rs.fundamental_weight(r).clearing_factor();
  const Rational half(1, 2);
  auto covered = [&](std::string family) {
    cf.status = ClosedForm::Status::covered;
    cf.family = std::move(family);
  };
  auto add_family = [&](int p, int q, const std::map<int, Rational>& tail) {
    for (const auto& t : index_tuples(p, q)) cf.weights.push_back(tuple_weight(n, t, tail));
  };

  switch (rs.kind()) {
    case Kind::B:
      if (r == 1) {
        covered("B, r = 1");
        cf.weights.push_back(-Weight::simple_root(n, n));
        set_word(rs, cf, r, descending(n));
      } else if (r == n) {
        covered("B, r = n");
        Weight w = Weight::zero(n);
        for (int i = 1; 2 * i - 1 <= n; ++i) w = w - half * Weight::simple_root(n, 2 * i - 1);
        cf.weights.push_back(w);
        set_word(rs, cf, r, b_last_node_word(n));
      } else if (r % 2 == 0) {
        covered("B, even r < n");
        add_family(r / 2, n - 1, {});
      } else {
        covered("B, odd r < n");
        add_family((r - 1) / 2, n - 2, {{n, Rational(1)}});
      }
      break;

    case Kind::C:
      if (r == 1) {
        covered("C, r = 1");
        cf.weights.push_back(-half * Weight::simple_root(n, n));
        set_word(rs, cf, r, descending(n));
      } else if (r == n) {
        cf.family = "C, r = n";
      } else if (r % 2 == 0) {
        covered("C, even r < n");
        add_family(r / 2, n - 1, {});
      } else {
        covered("C, odd r < n");
        add_family((r - 1) / 2, n - 2, {{n, half}});
      }
      break;

    case Kind::D:
      if (n < 4) {
        cf.family = "D_3";
        break;
      }
      if (r == 1) {
        covered("D, r = 1");
        cf.weights.push_back(-half * (Weight::simple_root(n, n - 1) + Weight::simple_root(n, n)));
        set_word(rs, cf, r, descending(n));
      } else if (r >= n - 1) {
        covered("D, r in {n-1, n}");
        cf.weights.push_back(Rational(1, 4) * Weight::of(spin_case_scaled_weight(n, r)));
        set_word(rs, cf, r, spin_case_word(n, r));
      } else if (r % 2 == 0) {
        covered("D, even r <= n-2");
        // Tuples ending in (n-2, n) are excluded: alpha_{n-2} and alpha_n are joined.
        for (const auto& t : index_tuples(r / 2, n)) {
          const auto& e = t.entries();
          if (e.size() >= 2 && e[e.size() - 2] == n - 2 && e.back() == n) continue;
          cf.weights.push_back(tuple_weight(n, t, {}));
        }
      } else {
        covered("D, odd r <= n-2");
        const Rational three_halves(3, 2);
        add_family((r - 1) / 2, n - 3, {{n - 1, half}, {n, half}});
        // The unbalanced tails only occur when the tuple ends at alpha_{n-2}.
        for (const auto& t : index_tuples((r - 1) / 2, n - 2)) {
          if (t.last() != n - 2) continue;
          cf.weights.push_back(tuple_weight(n, t, {{n - 1, half}, {n, three_halves}}));
          cf.weights.push_back(tuple_weight(n, t, {{n - 1, three_halves}, {n, half}}));
        }
      }
      break;

    case Kind::A: cf.family = "A"; break;
    case Kind::E:
    case Kind::F:
    case Kind::G: cf.family = rs.name(); break;
  }
  std::sort(cf.weights.begin(), cf.weights.end());
  return cf;
}

// ---------------------------------------------------------------------------
// Reports

MinimalSetReport::Verdict MinimalSetReport::verdict() const {
  if (!expected.covered()) return Verdict::theorem_silent;
  return match ? Verdict::match : Verdict::mismatch;
}

std::string to_string(MinimalSetReport::Verdict v) {
  switch (v) {
    case MinimalSetReport::Verdict::match: return "match";
    case MinimalSetReport::Verdict::mismatch: return "mismatch";
    case MinimalSetReport::Verdict::theorem_silent: return "theorem-silent";
  }
  return "?";
}

MinimalSetReport minimal_set_report(const RootSystem& rs, int r, std::uint64_t limit) {
  MinimalSetReport rep{rs.kind(), rs.rank(), r, minimal_admitting_oracle(rs, r, limit),
                       closed_form_minimal_weights(rs, r), false, {}};
  for (const auto& a : rep.oracle) {
    if (!is_nonpositive(a.weight) || a.weight.is_zero())
      throw InternalError("oracle weight " + to_string(a.weight) + " is not strictly below zero");
  }
  if (!rep.expected.covered()) return rep;

  std::vector<Weight> got;
  for (const auto& a : rep.oracle) got.push_back(a.weight);
  std::sort(got.begin(), got.end());
  if (std::adjacent_find(got.begin(), got.end()) != got.end())
    rep.mismatches.push_back("two minimal elements share a weight");
  std::vector<Weight> missing, extra;
  std::set_difference(rep.expected.weights.begin(), rep.expected.weights.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), rep.expected.weights.begin(), rep.expected.weights.end(),
                      std::back_inserter(extra));
  for (const auto& w : missing) rep.mismatches.push_back("expected weight not found: " + to_string(w));
  for (const auto& w : extra) rep.mismatches.push_back("unexpected minimal weight: " + to_string(w));
  if (rep.expected.word) {
    const WeylElement w = WeylElement::from_word(rs, *rep.expected.word);
    if (rep.oracle.size() != 1 || !(rep.oracle.front().element == w))
      rep.mismatches.push_back("explicit element " + to_string(*rep.expected.word) + " is not the unique minimal element");
  }
  rep.match = rep.mismatches.empty();
  return rep;
}

MaxCoordinateReport check_max_coordinate(const RootSystem& rs, int r, std::uint64_t limit) {
  check_r(rs, r);
  if (rs.kind() != Kind::B && rs.kind() != Kind::C && rs.kind() != Kind::D)
    throw UsageError("the maximal-coordinate check applies to types B, C, D");
  const int n = rs.rank();
  const Weight varpi = rs.fundamental_weight(r);
  MaxCoordinateReport rep{rs.kind(), n, r, 0, 2 <= r && r <= n - 2, {}, true, {}};
  std::vector<std::pair<WeylElement, Weight>> candidates;
  for (auto& w : min_coset_reps(rs, CosetSpec::maximal(r), limit)) {
    Weight image = apply(w, varpi);
    if (!is_nonnegative(image)) continue;
    rep.max_length = std::max(rep.max_length, w.word_length());
    candidates.emplace_back(std::move(w), std::move(image));
  }
  const Rational one(1), three_halves(3, 2);
  for (auto& [w, image] : candidates) {
    if (w.word_length() != rep.max_length) continue;
    MaxCoordinateReport::Entry e{w, image, *std::max_element(image.coords().begin(), image.coords().end()), {}};
    for (int i = 1; i <= n; ++i)
      if (image.coeff(i) == e.max_coordinate) e.argmax.push_back(i);
    const std::string where = rs.name() + " r=" + std::to_string(r) + " w=" + to_string(w.word());
    if (e.max_coordinate != one && e.max_coordinate != three_halves)
      rep.violations.push_back(where + ": max coordinate " + to_string(e.max_coordinate) + " not in {1, 3/2}");
    if (e.max_coordinate == three_halves) {
      if (rs.kind() != Kind::D) rep.violations.push_back(where + ": 3/2 outside type D");
      if (r % 2 == 0) rep.violations.push_back(where + ": 3/2 with even r");
      for (int i : e.argmax)
        if (i != n - 1 && i != n)
          rep.violations.push_back(where + ": 3/2 attained at alpha_" + std::to_string(i));
    }
    rep.entries.push_back(std::move(e));
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace schubss
