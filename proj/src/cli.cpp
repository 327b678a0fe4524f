#include "schubss/cli.hpp"

#include "schubss/coxfeas.hpp"
#include "schubss/error.hpp"
#include "schubss/render.hpp"
#include "schubss/ssgit.hpp"
#include "schubss/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace schubss {

namespace {

struct RunConfig {
  std::string kind;
  int rank = 0;
  int r = 0;
  std::string format = "text";
  std::uint64_t limit = 0;  // 0: environment or default
  unsigned workers = 1;
  std::string suite;
  int max_rank = 5;
  std::string word;
  std::string weight;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Word parse_word(const std::string& text, int rank) {
  Word w;
  for (const auto& tok : split(text, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad word letter '" + tok + "'");
    }
    if (v < 1 || v > rank) throw UsageError("word letter " + tok + " outside 1.." + std::to_string(rank));
    w.push_back(v);
  }
  return w;
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<Rational> coords;
  for (const auto& tok : split(text, ',')) coords.push_back(parse_rational(tok));
  if (static_cast<int>(coords.size()) != rank)
    throw UsageError("weight needs " + std::to_string(rank) + " coordinates, got " + std::to_string(coords.size()));
  return Weight(std::move(coords));
}

std::uint64_t limit_of(const RunConfig& c) { return c.limit ? c.limit : default_enumeration_limit(); }

int cmd_minimal(const RunConfig& c, std::ostream& out) {
  const RootSystem rs(parse_kind(c.kind), c.rank);
  if (rs.kind() != Kind::A && rs.kind() != Kind::B && rs.kind() != Kind::C && rs.kind() != Kind::D)
    throw UsageError("minimal sets are computed for types A, B, C, D");
  const Format f = parse_format(c.format);
  const MinimalSetReport rep = minimal_set_report(rs, c.r, limit_of(c));
  out << render(rep, f);
  return rep.verdict() == MinimalSetReport::Verdict::mismatch ? kExitFailure : kExitOk;
}

int cmd_coxeter(const RunConfig& c, std::ostream& out) {
  const RootSystem rs(parse_kind(c.kind), c.rank);
  const Format f = parse_format(c.format);
  if (rs.rank() > kMaxCoxeterRank)
    throw UsageError("Coxeter elements are enumerated up to rank " + std::to_string(kMaxCoxeterRank));
  const auto reports = classify_all(rs, c.workers);
  out << render(rs, reports, f);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CoxeterReport& r) { return r.agreement(); });
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Suite suite = parse_suite(c.suite);
  const Format f = parse_format(c.format);
  VerifyOptions opt;
  opt.max_rank = c.max_rank;
  opt.limit = limit_of(c);
  opt.workers = c.workers;
  err << "running " << to_string(suite) << " up to rank " << c.max_rank << "\n";
  const SuiteResult res = run_suite(suite, opt);
  out << render(res, f);
  return res.pass() ? kExitOk : kExitFailure;
}

int cmd_weights(const RunConfig& c, std::ostream& out) {
  const RootSystem rs(parse_kind(c.kind), c.rank);
  out << render_fundamental_weights(rs, parse_format(c.format));
  return kExitOk;
}

int cmd_admits(const RunConfig& c, std::ostream& out) {
  const RootSystem rs(parse_kind(c.kind), c.rank);
  const WeylElement w = WeylElement::from_word(rs, parse_word(c.word, rs.rank()));
  const Weight chi = parse_weight(c.weight, rs.rank());
  if (chi.is_zero()) throw PreconditionError(PreconditionError::Reason::zero_weight, "the weight must be nonzero");
  const bool ok = admits_semistable(rs, w, chi, chi.clearing_factor());
  const Weight image = apply(w, chi);
  const Format f = parse_format(c.format);
  if (f == Format::json) {
    nlohmann::json j = {{"system", {{"kind", std::string(1, to_char(rs.kind()))}, {"rank", rs.rank()}}},
                        {"entries", {{{"word", w.word()}, {"weight", weight_to_json(image)}}}},
                        {"match", ok}};
    out << canonical(j) << "\n";
  } else if (f == Format::csv) {
    out << "kind,rank,word,image,admits\n"
        << to_char(rs.kind()) << ',' << rs.rank() << ',' << to_string(w.word()) << ',' << to_string(image) << ','
        << ok << '\n';
  } else {
    out << "w = " << to_string(w.word()) << ", w(chi) = " << to_string(image) << "\n"
        << "semistable points: " << (ok ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus-semistable Schubert varieties: minimal admitting elements and Coxeter elements"};
  app.name("schubss");
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--limit", c.limit, "upper bound on |W| (default: $SCHUBSS_ENUM_LIMIT or 1000000)")
        ->check(CLI::PositiveNumber);
  };

  auto* minimal = app.add_subcommand("minimal", "Bruhat-minimal w in W^{I_r} with w(varpi_r) <= 0");
  minimal->add_option("kind", c.kind, "type letter A-D")->required();
  minimal->add_option("rank", c.rank)->required();
  minimal->add_option("r", c.r, "node of the maximal parabolic")->required();
  common(minimal);

  auto* coxeter = app.add_subcommand("coxeter", "classify the Coxeter elements of a type");
  coxeter->add_option("kind", c.kind, "type letter A-G")->required();
  coxeter->add_option("rank", c.rank)->required();
  coxeter->add_option("--workers", c.workers, "threads (0: all cores)");
  common(coxeter);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", c.suite, "pairing-bound, prop31, thm32, thm42, invariants or all")
      ->required()
      ->check(CLI::IsMember({"pairing-bound", "prop31", "thm32", "thm42", "invariants", "all"}));
  verify->add_option("--max-rank", c.max_rank, "largest rank in the grid")->check(CLI::Range(1, 8));
  verify->add_option("--workers", c.workers, "threads (0: all cores)");
  common(verify);

  auto* weights = app.add_subcommand("weights", "fundamental weights in the simple-root basis");
  weights->add_option("kind", c.kind)->required();
  weights->add_option("rank", c.rank)->required();
  weights->add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* admits = app.add_subcommand("admits", "test w(chi) <= 0 for one element and weight");
  admits->add_option("kind", c.kind)->required();
  admits->add_option("rank", c.rank)->required();
  admits->add_option("--word", c.word, "comma-separated labels, e.g. 3,2,1")->required();
  admits->add_option("--weight", c.weight, "root-basis coordinates, e.g. 1,2,1 or 1/2,1,3/2")->required();
  admits->add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (minimal->parsed()) return cmd_minimal(c, out);
    if (coxeter->parsed()) return cmd_coxeter(c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (weights->parsed()) return cmd_weights(c, out);
    if (admits->parsed()) return cmd_admits(c, out);
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << " (raise it with --limit or SCHUBSS_ENUM_LIMIT)\n";
    return kExitLimit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace schubss
