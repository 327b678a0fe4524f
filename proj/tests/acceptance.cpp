// Acceptance run: one line per criterion, then details for failures.
//
//   acceptance [--expect-fail 2,5]
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include "schubss/coxfeas.hpp"
#include "schubss/error.hpp"
#include "schubss/ssgit.hpp"
#include "schubss/verify.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

using namespace schubss;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string what) {
    pass = false;
    details.push_back(std::move(what));
  }
  void note(std::string what) { details.push_back("note: " + std::move(what)); }
};

Word descending(int n) {
  Word w;
  for (int j = n; j >= 1; --j) w.push_back(j);
  return w;
}

Weight negative_sum(int n, std::initializer_list<int> labels) {
  Weight w = Weight::zero(n);
  for (int l : labels) w = w - Weight::simple_root(n, l);
  return w;
}

void expect_pair(Outcome& o, const RootSystem& rs, const std::string& what, const Word& word, int r,
                 const Rational& scale, const Weight& stated) {
  const Weight got = apply(WeylElement::from_word(rs, word), scale * rs.fundamental_weight(r));
  if (got != stated)
    o.fail(rs.name() + " " + what + " w=" + to_string(word) + ": stated " + to_string(stated) + ", computed " +
           to_string(got));
}

// --- 1 ---------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  Rational worst = 0;
  int systems = 0;
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = (k == Kind::D ? 3 : 2); n <= 7; ++n) {
      const RootSystem rs(k, n);
      const Rational m = max_pairing(rs);
      worst = std::max(worst, m);
      ++systems;
      if (m > 2) o.fail(rs.name() + ": max |<varpi_r, beta^vee>| = " + to_string(m));
    }
  o.summary = std::to_string(systems) + " systems A/B/C 2-7, D 3-7; largest pairing " + to_string(worst);
  return o;
}

// --- 2 ---------------------------------------------------------------------

// The printed spin-case weight: mu plus the mod-4 branch.
Weight printed_spin_weight(int n, int r) {
  std::vector<long> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= (n - 1) / 2; ++i) c[static_cast<std::size_t>(2 * i - 2)] -= 2;
  auto add = [&](int label, long v) { c[static_cast<std::size_t>(label - 1)] += v; };
  const bool last = r == n;
  switch (n % 4) {
    case 0: add(last ? n - 1 : n, -2); break;
    case 2: add(last ? n : n - 1, -2); break;
    case 1:
      add(n - 2, -2);
      add(n - 1, last ? -1 : -3);
      add(n, last ? -3 : -1);
      break;
    case 3:
      add(n - 2, -2);
      add(n - 1, last ? -3 : -1);
      add(n, last ? -1 : -3);
      break;
  }
  return Weight::of(c);
}

// The printed spin-case element: w_1 w_2 ... w_m, m = floor((n-1)/2),
// w_i = tau_i s_{n-1} or tau_i s_n by parity, tau_i = s_{2i-1} ... s_{n-2}.
Word printed_spin_word(int n, int r, bool ascending) {
  const int m = (n - 1) / 2;
  std::vector<Word> factors;
  for (int i = 1; i <= m; ++i) {
    Word f;
    for (int j = 2 * i - 1; j <= n - 2; ++j) f.push_back(j);
    const bool odd = i % 2 == 1;
    if (r == n - 1) f.push_back(odd ? n - 1 : n);
    else f.push_back(odd ? n : n - 1);
    factors.push_back(std::move(f));
  }
  if (!ascending) std::reverse(factors.begin(), factors.end());
  Word out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

Outcome criterion2() {
  Outcome o;
  int pairs = 0;
  for (int n = 3; n <= 7; ++n) {
    const RootSystem b(Kind::B, n);
    expect_pair(o, b, "r=1", descending(n), 1, 1, -Weight::simple_root(n, n));
    Word word;
    for (int i = (n + 1) / 2; i >= 1; --i)
      for (int j = 2 * i - 1; j <= n; ++j) word.push_back(j);
    Weight odd_sum = Weight::zero(n);
    for (int i = 1; 2 * i - 1 <= n; ++i) odd_sum = odd_sum - Weight::simple_root(n, 2 * i - 1);
    expect_pair(o, b, "r=n", word, n, 2, odd_sum);

    const RootSystem c(Kind::C, n);
    expect_pair(o, c, "r=1", descending(n), 1, 2, -Weight::simple_root(n, n));
    pairs += 3;
  }
  for (int n = 4; n <= 7; ++n) {
    const RootSystem d(Kind::D, n);
    expect_pair(o, d, "r=1", descending(n), 1, 2, negative_sum(n, {n - 1, n}));
    ++pairs;
    for (int r : {n - 1, n}) {
      ++pairs;
      const Weight stated = printed_spin_weight(n, r);
      const Word as_printed = printed_spin_word(n, r, true);
      const Word reversed = printed_spin_word(n, r, false);
      const Weight got = apply(WeylElement::from_word(d, as_printed), Rational(4) * d.fundamental_weight(r));
      const Weight got_rev = apply(WeylElement::from_word(d, reversed), Rational(4) * d.fundamental_weight(r));
      if (got != stated && got_rev != stated)
        o.fail(d.name() + " r=" + std::to_string(r) + " w=" + to_string(as_printed) + ": stated " +
               to_string(stated) + ", computed " + to_string(got) + " (reversed factor order: " + to_string(got_rev) +
               ")");
      // What an element with one more factor actually gives.
      const Weight corrected = Weight::of(spin_case_scaled_weight(n, r));
      if (corrected != stated)
        o.note(d.name() + " r=" + std::to_string(r) + ": w_{m+1}...w_1 = " + to_string(spin_case_word(n, r)) +
               " gives " + to_string(corrected));
    }
  }
  o.summary = std::to_string(pairs) + " stated (element, weight) pairs, B/C 3-7, D 4-7";
  return o;
}

// --- 3 ---------------------------------------------------------------------

template <typename F>
void over_bcd_grid(F&& f) {
  for (auto [k, lo, hi] : {std::tuple{Kind::B, 3, 5}, {Kind::C, 3, 5}, {Kind::D, 4, 5}})
    for (int n = lo; n <= hi; ++n) f(RootSystem(k, n));
}

Outcome criterion3() {
  Outcome o;
  int covered = 0, silent = 0;
  over_bcd_grid([&](const RootSystem& rs) {
    for (int r = 1; r <= rs.rank(); ++r) {
      const MinimalSetReport rep = minimal_set_report(rs, r);
      switch (rep.verdict()) {
        case MinimalSetReport::Verdict::match: ++covered; break;
        case MinimalSetReport::Verdict::theorem_silent: ++silent; break;
        case MinimalSetReport::Verdict::mismatch:
          ++covered;
          for (const auto& m : rep.mismatches) o.fail(rs.name() + " r=" + std::to_string(r) + ": " + m);
          break;
      }
    }
  });
  o.summary = std::to_string(covered) + " covered (type, r) instances, " + std::to_string(silent) +
              " theorem-silent; B/C 3-5, D 4-5";
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  int in_scope = 0, out_scope = 0, out_violations = 0, three_halves = 0;
  over_bcd_grid([&](const RootSystem& rs) {
    for (int r = 1; r <= rs.rank(); ++r) {
      const MaxCoordinateReport rep = check_max_coordinate(rs, r);
      if (!rep.in_scope) {
        ++out_scope;
        out_violations += !rep.pass;
        continue;
      }
      ++in_scope;
      for (const auto& e : rep.entries) three_halves += e.max_coordinate == Rational(3, 2);
      for (const auto& v : rep.violations) o.fail(v);
    }
  });
  o.summary = std::to_string(in_scope) + " instances with 2 <= r <= n-2 on B/C 3-5, D 4-5; " +
              std::to_string(three_halves) + " elements with a = 3/2";
  o.note(std::to_string(out_scope) + " instances with r in {1, n-1, n} are outside the statement's hypotheses; " +
         std::to_string(out_violations) + " of them have a not in {1, 3/2}");
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  std::vector<RootSystem> systems;
  for (auto [k, n] : {std::pair{Kind::A, 3}, {Kind::B, 2}, {Kind::D, 4}, {Kind::G, 2}, {Kind::F, 4}, {Kind::E, 6},
                      {Kind::E, 7}, {Kind::E, 8}})
    systems.emplace_back(k, n);
  for (int n = 4; n <= 6; ++n) systems.emplace_back(Kind::A, n);
  for (Kind k : {Kind::B, Kind::C})
    for (int n = 3; n <= 6; ++n) systems.emplace_back(k, n);
  for (int n = 5; n <= 6; ++n) systems.emplace_back(Kind::D, n);

  std::size_t elements = 0, positive = 0;
  for (const auto& rs : systems) {
    const auto reports = classify_all(rs, 0);
    elements += reports.size();
    for (const auto& r : reports) {
      if (r.admits()) {
        ++positive;
        const Weight& x = *r.witness();
        if (!x.is_integral() || x.is_zero() || !rs.is_dominant(x) || !is_nonpositive(apply(r.element(), x)))
          o.fail(rs.name() + " " + to_string(r.element().word()) + ": witness does not re-verify");
      }
      if (!r.agreement())
        o.fail(rs.name() + " w=" + to_string(r.element().word()) + ": computed admits=" +
               (r.admits() ? "true" : "false") + ", expected " + to_string(r.expected().kind) + " " +
               (r.expected().admits ? "true" : "false") + " (" + r.expected().rule + ")");
    }
  }
  o.summary = std::to_string(elements) + " Coxeter elements over " + std::to_string(systems.size()) + " systems, " +
              std::to_string(positive) + " admitting with re-verified witnesses";
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  std::size_t elements = 0;
  for (auto [k, lo, hi] : {std::tuple{Kind::A, 1, 4}, {Kind::B, 2, 4}, {Kind::C, 2, 4}, {Kind::D, 3, 4},
                            {Kind::F, 4, 4}, {Kind::G, 2, 2}})
    for (int n = lo; n <= hi; ++n) {
      const RootSystem rs(k, n);
      for (const auto& w : coxeter_elements(rs)) {
        ++elements;
        const bool fm = decide_admits(rs, w).admits;
        const bool grid = grid_search(rs, w, 6).has_value();
        if (fm != grid)
          o.fail(rs.name() + " " + to_string(w.word()) + ": elimination " + (fm ? "feasible" : "infeasible") +
                 ", grid " + (grid ? "hit" : "miss"));
      }
    }
  o.summary = std::to_string(elements) + " Coxeter elements of rank <= 4, grid {0..6}^n";
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  VerifyOptions opt;
  opt.max_rank = 4;
  const SuiteResult inv = verify_invariants(opt);
  for (const auto& i : inv.instances)
    if (i.status == Instance::Status::fail) o.fail(i.check + " " + to_char(i.kind) + std::to_string(i.rank) + ": " + i.detail);
  int instances = 0;
  over_bcd_grid([&](const RootSystem& rs) {
    for (int r = 1; r <= rs.rank(); ++r) {
      ++instances;
      try {
        (void)minimal_admitting_oracle(rs, r);
      } catch (const InternalError& e) {
        o.fail(e.what());
      }
    }
  });
  o.summary = std::to_string(inv.count(Instance::Status::pass)) + " invariant checks at rank <= 4; filters agree on " +
              std::to_string(instances) + " minimal-set instances";
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome criterion8() {
  Outcome o;
  const RootSystem a3(Kind::A, 3);
  const Word word{1, 3, 2};
  const long ray[] = {1, 2, 1};
  if (!cone_is_ray(a3, WeylElement::from_word(a3, word), ray)) o.fail("cone of s1 s3 s2 is not the ray (1,2,1)");
  o.summary = "A3, w = s1 s3 s2, ray (1,2,1)";
  return o;
}

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail N,M,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pairing bound |<varpi_r, beta^vee>| <= 2", criterion1},
      {"explicit elements reproduce the stated weights", criterion2},
      {"minimal sets equal the closed forms", criterion3},
      {"maximal coordinate in {1, 3/2}", criterion4},
      {"Coxeter classification across types", criterion5},
      {"elimination agrees with grid search", criterion6},
      {"structural invariants", criterion7},
      {"A3 cone is a single ray", criterion8},
  };

  std::set<int> failed;
  std::vector<std::string> detail_lines;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << criteria[i].first << " - "
              << o.summary << " (tolerance: exact)\n";
    for (const auto& d : o.details) detail_lines.push_back("  " + std::to_string(id) + ": " + d);
  }
  if (!detail_lines.empty()) {
    std::cout << "\ndetails:\n";
    for (const auto& d : detail_lines) std::cout << d << '\n';
  }
  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass\n";
  if (failed != expected_failures) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
