#include "schubss/verify.hpp"

#include "schubss/coxfeas.hpp"
#include "schubss/error.hpp"
#include "schubss/ssgit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schubss {

Suite parse_suite(std::string_view text) {
  if (text == "pairing-bound") return Suite::pairing_bound;
  if (text == "prop31") return Suite::prop31;
  if (text == "thm32") return Suite::thm32;
  if (text == "thm42") return Suite::thm42;
  if (text == "invariants") return Suite::invariants;
  if (text == "all") return Suite::all;
  throw UsageError("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::pairing_bound: return "pairing-bound";
    case Suite::prop31: return "prop31";
    case Suite::thm32: return "thm32";
    case Suite::thm42: return "thm42";
    case Suite::invariants: return "invariants";
    case Suite::all: return "all";
  }
  return "?";
}

std::string to_string(Instance::Status s) {
  switch (s) {
    case Instance::Status::pass: return "pass";
    case Instance::Status::fail: return "fail";
    case Instance::Status::info: return "info";
  }
  return "?";
}

bool SuiteResult::pass() const { return count(Instance::Status::fail) == 0; }

std::size_t SuiteResult::count(Instance::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [s](const Instance& i) { return i.status == s; }));
}

namespace {

using Status = Instance::Status;

struct Grid {
  Kind kind;
  int from;
};

// Every (kind, rank) with from <= rank <= max_rank.
std::vector<RootSystem> systems(std::initializer_list<Grid> grid, int max_rank) {
  std::vector<RootSystem> out;
  for (const auto& g : grid)
    for (int n = g.from; n <= max_rank; ++n) out.emplace_back(g.kind, n);
  return out;
}

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

template <class Range, class F>
std::string join(const Range& items, F&& f, std::string_view sep = ", ") {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += sep;
    out += f(x);
  }
  return out;
}

}  // namespace

Rational max_pairing(const RootSystem& rs) {
  Rational best = 0;
  for (int r = 1; r <= rs.rank(); ++r) {
    const Weight varpi = rs.fundamental_weight(r);
    for (const auto& d : rs.roots()) best = std::max(best, Rational(abs(rs.pairing_with_coroot(varpi, d.coroot))));
  }
  return best;
}

SuiteResult verify_pairing_bound(const VerifyOptions& opt) {
  SuiteResult res{"pairing-bound", {}};
  for (const auto& rs : systems({{Kind::A, 2}, {Kind::B, 2}, {Kind::C, 2}, {Kind::D, 3}}, opt.max_rank)) {
    const Rational m = max_pairing(rs);
    res.instances.push_back(
        {rs.kind(), rs.rank(), 0, "max |<varpi_r, beta^vee>| <= 2", status_of(m <= 2), "max = " + to_string(m)});
  }
  return res;
}

SuiteResult verify_prop31(const VerifyOptions& opt) {
  SuiteResult res{"prop31", {}};
  for (const auto& rs : systems({{Kind::B, 2}, {Kind::C, 2}, {Kind::D, 4}}, opt.max_rank)) {
    for (int r = 1; r <= rs.rank(); ++r) {
      const MaxCoordinateReport rep = check_max_coordinate(rs, r, opt.limit);
      std::set<Rational> values;
      std::set<int> at_three_halves;
      for (const auto& e : rep.entries) {
        values.insert(e.max_coordinate);
        if (e.max_coordinate == Rational(3, 2)) at_three_halves.insert(e.argmax.begin(), e.argmax.end());
      }
      std::string detail = "l = " + std::to_string(rep.max_length) + ", " + std::to_string(rep.entries.size()) +
                           " elements, a in {" + join(values, [](const Rational& q) { return to_string(q); }) + "}";
      if (!at_three_halves.empty())
        detail += ", 3/2 at " + join(at_three_halves, [](int i) { return "alpha_" + std::to_string(i); });
      if (!rep.in_scope) {
        detail = "outside 2 <= r <= n-2: " + detail;
      } else if (!rep.pass) {
        detail += "; " + join(rep.violations, [](const std::string& s) { return s; }, "; ");
      }
      res.instances.push_back({rs.kind(), rs.rank(), r, "max coordinate in {1, 3/2}",
                               rep.in_scope ? status_of(rep.pass) : Status::info, std::move(detail)});
    }
  }
  return res;
}

SuiteResult verify_thm32(const VerifyOptions& opt) {
  SuiteResult res{"thm32", {}};
  for (const auto& rs : systems({{Kind::B, 2}, {Kind::C, 2}, {Kind::D, 3}}, opt.max_rank)) {
    for (int r = 1; r <= rs.rank(); ++r) {
      Instance inst{rs.kind(), rs.rank(), r, "minimal weights", Status::pass, {}};
      try {
        const MinimalSetReport rep = minimal_set_report(rs, r, opt.limit);
        const std::string weights =
            join(rep.oracle, [](const AdmittingElement& a) { return "[" + to_string(a.weight) + "]"; });
        switch (rep.verdict()) {
          case MinimalSetReport::Verdict::match:
            inst.detail = rep.expected.family + ": " + std::to_string(rep.oracle.size()) + " elements";
            break;
          case MinimalSetReport::Verdict::mismatch:
            inst.status = Status::fail;
            inst.detail = rep.expected.family + ": " + join(rep.mismatches, [](const std::string& s) { return s; }, "; ");
            break;
          case MinimalSetReport::Verdict::theorem_silent:
            inst.status = Status::info;
            inst.detail = "theorem-silent; oracle: " + weights;
            break;
        }
      } catch (const InternalError& e) {
        inst.status = Status::fail;
        inst.detail = e.what();
      }
      res.instances.push_back(std::move(inst));
    }
  }
  return res;
}

SuiteResult verify_thm42(const VerifyOptions& opt) {
  SuiteResult res{"thm42", {}};
  const int top = std::min(opt.max_rank, kMaxCoxeterRank);
  auto grid = systems({{Kind::A, 1}, {Kind::B, 2}, {Kind::C, 2}, {Kind::D, 3}}, top);
  for (auto [k, n] : {std::pair{Kind::E, 6}, {Kind::E, 7}, {Kind::E, 8}, {Kind::F, 4}, {Kind::G, 2}})
    grid.emplace_back(k, n);

  for (const auto& rs : grid) {
    const auto reports = classify_all(rs, opt.workers);
    std::vector<const CoxeterReport*> disagree, pruned, admitting, nonpositive_witness;
    for (const auto& rep : reports) {
      if (!rep.agreement()) disagree.push_back(&rep);
      if (rep.admits() && !rep.passes_lemma41()) pruned.push_back(&rep);
      if (rep.admits()) admitting.push_back(&rep);
      if (rep.witness()) {
        const auto c = rep.witness()->coords();
        if (std::any_of(c.begin(), c.end(), [](const Rational& q) { return q <= 0; }))
          nonpositive_witness.push_back(&rep);
      }
    }
    auto words = [](const std::vector<const CoxeterReport*>& v) {
      return join(v, [](const CoxeterReport* r) { return to_string(r->element().word()); }, "; ");
    };
    const Expectation::Kind ek = reports.empty() ? Expectation::Kind::uncovered : reports.front().expected().kind;
    const std::string rule = reports.empty() ? "" : reports.front().expected().rule;

    if (ek == Expectation::Kind::uncovered) {
      res.instances.push_back({rs.kind(), rs.rank(), 0, "classification", Status::info,
                               rule + "; admitting: " + (admitting.empty() ? "none" : words(admitting))});
    } else {
      std::string detail = to_string(ek) + " (" + rule + "), " + std::to_string(reports.size()) + " elements, " +
                           std::to_string(admitting.size()) + " admit";
      if (!disagree.empty()) {
        detail += "; disagree: " + join(disagree, [](const CoxeterReport* r) {
                    return to_string(r->element().word()) + (r->admits() ? " (admits)" : " (infeasible)");
                  }, "; ");
      }
      res.instances.push_back(
          {rs.kind(), rs.rank(), 0, "classification", status_of(disagree.empty()), std::move(detail)});
      if (ek == Expectation::Kind::necessity) {
        const auto pattern = expected_pattern(rs);
        std::size_t confirmed = 0;
        for (const auto& rep : reports)
          if (rep.admits() && std::find(pattern.begin(), pattern.end(), rep.element()) != pattern.end()) ++confirmed;
        res.instances.push_back({rs.kind(), rs.rank(), 0, "pattern converse", Status::info,
                                 std::to_string(confirmed) + " of " + std::to_string(pattern.size()) +
                                     " pattern elements admit"});
      }
      if (!disagree.empty())
        res.instances.push_back({rs.kind(), rs.rank(), 0, "admitting set", Status::info,
                                 admitting.empty() ? "none" : words(admitting)});
    }
    res.instances.push_back({rs.kind(), rs.rank(), 0, "admits implies lemma filter", status_of(pruned.empty()),
                             pruned.empty() ? "" : words(pruned)});
    res.instances.push_back({rs.kind(), rs.rank(), 0, "witness coordinates positive",
                             status_of(nonpositive_witness.empty()),
                             nonpositive_witness.empty() ? "" : words(nonpositive_witness)});
  }
  return res;
}

SuiteResult verify_invariants(const VerifyOptions& opt) {
  SuiteResult res{"invariants", {}};
  const int top = std::min(opt.max_rank, 4);

  for (const auto& rs : systems({{Kind::A, 1}, {Kind::B, 2}, {Kind::C, 2}, {Kind::D, 3}}, top)) {
    for (int r = 1; r <= rs.rank(); ++r) {
      const Weight varpi = rs.fundamental_weight(r);
      const Integer k = varpi.clearing_factor();
      const auto scaled = varpi.scaled_integers(k);
      const auto reps = min_coset_reps(rs, CosetSpec::maximal(r), opt.limit);
      std::vector<std::vector<long>> images;
      for (const auto& w : reps) images.push_back(apply(w, std::span<const long>(scaled)));
      auto leq = [](const std::vector<long>& a, const std::vector<long>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] > b[i]) return false;
        return true;
      };
      auto nonpositive = [](const std::vector<long>& a) {
        return std::all_of(a.begin(), a.end(), [](long x) { return x <= 0; });
      };
      std::size_t pairs = 0;
      std::vector<std::string> bad_mono, bad_up;
      for (std::size_t u = 0; u < reps.size(); ++u)
        for (std::size_t w = 0; w < reps.size(); ++w) {
          if (u == w || !bruhat_leq(rs, reps[u], reps[w])) continue;
          ++pairs;
          if (!leq(images[w], images[u]))
            bad_mono.push_back(to_string(reps[u].word()) + " <= " + to_string(reps[w].word()));
          if (nonpositive(images[u]) && !nonpositive(images[w]))
            bad_up.push_back(to_string(reps[u].word()) + " <= " + to_string(reps[w].word()));
        }
      auto list = [](const std::vector<std::string>& v) { return join(v, [](const std::string& s) { return s; }, "; "); };
      res.instances.push_back({rs.kind(), rs.rank(), r, "Bruhat monotonicity", status_of(bad_mono.empty()),
                               std::to_string(pairs) + " comparable pairs" +
                                   (bad_mono.empty() ? "" : "; violated: " + list(bad_mono))});
      res.instances.push_back({rs.kind(), rs.rank(), r, "admitting set up-closed", status_of(bad_up.empty()),
                               bad_up.empty() ? "" : list(bad_up)});

      Instance filters{rs.kind(), rs.rank(), r, "global and local filters agree", Status::pass, {}};
      try {
        filters.detail = std::to_string(minimal_admitting_oracle(rs, r, opt.limit).size()) + " minimal elements";
      } catch (const InternalError& e) {
        filters.status = Status::fail;
        filters.detail = e.what();
      }
      res.instances.push_back(std::move(filters));
    }
  }

  // Feasibility engine against bounded grid search, every type of rank <= 4.
  auto small = systems({{Kind::A, 1}, {Kind::B, 2}, {Kind::C, 2}, {Kind::D, 3}}, top);
  if (top >= 2) small.emplace_back(Kind::G, 2);
  if (top >= 4) small.emplace_back(Kind::F, 4);
  for (const auto& rs : small) {
    std::size_t agree = 0, rescued = 0;
    std::vector<std::string> bad;
    const auto elements = coxeter_elements(rs);
    for (const auto& w : elements) {
      const Decision d = decide_admits(rs, w);
      const auto g = grid_search(rs, w);
      if (d.admits == g.has_value()) {
        ++agree;
      } else if (d.admits) {
        // The grid bound may be too small; the witness itself must hold.
        CoxeterReport check(rs, w, lemma41_filter(rs, w), d, expected_thm42(rs, w));
        ++rescued;
      } else {
        bad.push_back(to_string(w.word()));
      }
    }
    res.instances.push_back({rs.kind(), rs.rank(), 0, "Fourier-Motzkin vs grid {0..6}^n", status_of(bad.empty()),
                             std::to_string(agree) + "/" + std::to_string(elements.size()) + " agree" +
                                 (rescued ? ", " + std::to_string(rescued) + " beyond the grid, witness verified" : "") +
                                 (bad.empty() ? "" : "; grid finds a point FM rejects: " +
                                                         join(bad, [](const std::string& s) { return s; }, "; "))});
  }

  if (top >= 3) {
    const RootSystem a3(Kind::A, 3);
    const int word[] = {1, 3, 2};
    const long ray[] = {1, 2, 1};
    const bool ok = cone_is_ray(a3, WeylElement::from_word(a3, word), ray);
    res.instances.push_back({Kind::A, 3, 0, "cone of s1 s3 s2 is the ray (1,2,1)", status_of(ok), ""});
  }
  return res;
}

SuiteResult run_suite(Suite suite, const VerifyOptions& opt) {
  switch (suite) {
    case Suite::pairing_bound: return verify_pairing_bound(opt);
    case Suite::prop31: return verify_prop31(opt);
    case Suite::thm32: return verify_thm32(opt);
    case Suite::thm42: return verify_thm42(opt);
    case Suite::invariants: return verify_invariants(opt);
    case Suite::all: break;
  }
  SuiteResult all{"all", {}};
  for (Suite s : {Suite::pairing_bound, Suite::prop31, Suite::thm32, Suite::thm42, Suite::invariants}) {
    auto part = run_suite(s, opt);
    for (auto& inst : part.instances) {
      inst.check = part.suite + ": " + inst.check;
      all.instances.push_back(std::move(inst));
    }
  }
  return all;
}

}  // namespace schubss
