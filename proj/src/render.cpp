#include "schubss/render.hpp"

#include "schubss/error.hpp"

#include <algorithm>
#include <sstream>

namespace schubss {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError("unknown format '" + std::string(text) + "' (text, json, csv)");
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& q : w.coords()) out.push_back(to_string(q));
  return out;
}

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("weight must be an array of fraction strings");
  std::vector<Rational> coords;
  for (const auto& e : j) {
    if (!e.is_string()) throw UsageError("weight coordinate must be a string");
    coords.push_back(parse_rational(e.get<std::string>()));
  }
  return Weight(std::move(coords));
}

namespace {

json system_json(Kind kind, int rank) { return {{"kind", std::string(1, to_char(kind))}, {"rank", rank}}; }

json word_json(const Word& w) { return json(w); }

std::string space_joined(const Weight& w) {
  std::string out;
  for (const auto& q : w.coords()) {
    if (!out.empty()) out += ' ';
    out += to_string(q);
  }
  return out;
}

std::string space_joined(const Word& w) {
  std::string out;
  for (int i : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Column-aligned table; widths count code points so that α lines up.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = width(header[i]);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s = " ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += ' ' + cells[i];
      if (i + 1 < cells.size()) s += std::string(w[i] - width(cells[i]) + 2, ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string canonical(const json& j) { return j.dump(); }

// ---------------------------------------------------------------------------
// Minimal sets

json to_json(const MinimalSetReport& rep) {
  json entries = json::array();
  for (const auto& a : rep.oracle) entries.push_back({{"word", word_json(a.element.word())}, {"weight", weight_to_json(a.weight)}});
  json expected = {{"status", rep.expected.covered() ? "covered" : "theorem-silent"},
                   {"family", rep.expected.family},
                   {"scale", rep.expected.scale.get_str()}};
  json weights = json::array();
  for (const auto& w : rep.expected.weights) weights.push_back(weight_to_json(w));
  expected["weights"] = std::move(weights);
  if (rep.expected.word) expected["word"] = word_json(*rep.expected.word);
  json out = {{"system", system_json(rep.kind, rep.rank)},
              {"r", rep.r},
              {"entries", std::move(entries)},
              {"expected", std::move(expected)},
              {"verdict", to_string(rep.verdict())},
              {"mismatches", rep.mismatches}};
  if (rep.expected.covered()) out["match"] = rep.match;
  return out;
}

std::string render(const MinimalSetReport& rep, Format format) {
  switch (format) {
    case Format::json: return canonical(to_json(rep)) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "kind,rank,r,word,weight,verdict\n";
      for (const auto& a : rep.oracle)
        os << to_char(rep.kind) << ',' << rep.rank << ',' << rep.r << ',' << space_joined(a.element.word()) << ','
           << space_joined(a.weight) << ',' << to_string(rep.verdict()) << '\n';
      return os.str();
    }
    case Format::text: break;
  }
  std::ostringstream os;
  os << to_char(rep.kind) << rep.rank << ", r = " << rep.r << ": " << rep.oracle.size()
     << " minimal element" << (rep.oracle.size() == 1 ? "" : "s") << " w with w(varpi_r) <= 0\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& a : rep.oracle) rows.push_back({to_string(a.element.word()), to_string(a.weight)});
  os << table({"word", "w(varpi_r)"}, rows);
  if (rep.expected.covered()) {
    os << "expected (" << rep.expected.family << "): " << rep.expected.weights.size() << " weight" << (rep.expected.weights.size() == 1 ? "" : "s");
    if (rep.expected.word) os << ", element " << to_string(*rep.expected.word);
    os << '\n';
    for (const auto& m : rep.mismatches) os << "  " << m << '\n';
  }
  os << "verdict: " << to_string(rep.verdict()) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Coxeter elements

json to_json(const RootSystem& rs, const std::vector<CoxeterReport>& reports) {
  json entries = json::array();
  bool all = true;
  for (const auto& r : reports) {
    json e = {{"word", word_json(r.element().word())},
              {"admits", r.admits()},
              {"lemma41", r.passes_lemma41()},
              {"expected", {{"kind", to_string(r.expected().kind)}, {"admits", r.expected().admits}, {"rule", r.expected().rule}}},
              {"agreement", r.agreement()}};
    if (r.witness()) e["weight"] = weight_to_json(*r.witness());
    all = all && r.agreement();
    entries.push_back(std::move(e));
  }
  return {{"system", system_json(rs.kind(), rs.rank())}, {"entries", std::move(entries)}, {"match", all}};
}

std::string render(const RootSystem& rs, const std::vector<CoxeterReport>& reports, Format format) {
  switch (format) {
    case Format::json: return canonical(to_json(rs, reports)) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "kind,rank,word,lemma41,admits,witness,expected_kind,expected_admits,agreement\n";
      for (const auto& r : reports)
        os << to_char(rs.kind()) << ',' << rs.rank() << ',' << space_joined(r.element().word()) << ','
           << r.passes_lemma41() << ',' << r.admits() << ',' << (r.witness() ? space_joined(*r.witness()) : "") << ','
           << to_string(r.expected().kind) << ',' << r.expected().admits << ',' << r.agreement() << '\n';
      return os.str();
    }
    case Format::text: break;
  }
  std::ostringstream os;
  const std::size_t agree =
      static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.agreement(); }));
  os << rs.name() << ": " << reports.size() << " Coxeter elements";
  if (!reports.empty()) os << ", " << reports.front().expected().rule << " [" << to_string(reports.front().expected().kind) << "]";
  os << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    rows.push_back({to_string(r.element().word()), yes_no(r.passes_lemma41()), yes_no(r.admits()),
                    r.witness() ? to_string(*r.witness()) : "-", yes_no(r.expected().admits), yes_no(r.agreement())});
  os << table({"word", "lemma", "admits", "witness chi", "expected", "agree"}, rows);
  os << agree << "/" << reports.size() << " agree\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Suites

json to_json(const SuiteResult& res) {
  json results = json::array();
  for (const auto& i : res.instances) {
    json e = {{"system", system_json(i.kind, i.rank)}, {"check", i.check}, {"status", to_string(i.status)},
              {"detail", i.detail}};
    if (i.r) e["r"] = i.r;
    results.push_back(std::move(e));
  }
  return {{"suite", res.suite},
          {"results", std::move(results)},
          {"match", res.pass()},
          {"counts",
           {{"pass", res.count(Instance::Status::pass)},
            {"fail", res.count(Instance::Status::fail)},
            {"info", res.count(Instance::Status::info)}}}};
}

std::string render(const SuiteResult& res, Format format) {
  switch (format) {
    case Format::json: return canonical(to_json(res)) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "suite,kind,rank,r,check,status,detail\n";
      for (const auto& i : res.instances)
        os << res.suite << ',' << to_char(i.kind) << ',' << i.rank << ',' << (i.r ? std::to_string(i.r) : "") << ','
           << csv_field(i.check) << ',' << to_string(i.status) << ',' << csv_field(i.detail) << '\n';
      return os.str();
    }
    case Format::text: break;
  }
  std::ostringstream os;
  for (const auto& i : res.instances) {
    os << '[' << to_string(i.status) << "] " << to_char(i.kind) << i.rank;
    if (i.r) os << " r=" << i.r;
    os << "  " << i.check;
    if (!i.detail.empty()) os << ": " << i.detail;
    os << '\n';
  }
  os << res.suite << ": " << res.count(Instance::Status::pass) << " pass, " << res.count(Instance::Status::fail)
     << " fail, " << res.count(Instance::Status::info) << " info\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Fundamental weights

json fundamental_weights_json(const RootSystem& rs) {
  json entries = json::array();
  for (int r = 1; r <= rs.rank(); ++r)
    entries.push_back({{"r", r}, {"weight", weight_to_json(rs.fundamental_weight(r))}});
  return {{"system", system_json(rs.kind(), rs.rank())}, {"entries", std::move(entries)}};
}

std::string render_fundamental_weights(const RootSystem& rs, Format format) {
  switch (format) {
    case Format::json: return canonical(fundamental_weights_json(rs)) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "kind,rank,r,weight\n";
      for (int r = 1; r <= rs.rank(); ++r)
        os << to_char(rs.kind()) << ',' << rs.rank() << ',' << r << ',' << space_joined(rs.fundamental_weight(r)) << '\n';
      return os.str();
    }
    case Format::text: break;
  }
  std::vector<std::vector<std::string>> rows;
  for (int r = 1; r <= rs.rank(); ++r) rows.push_back({"varpi_" + std::to_string(r), to_string(rs.fundamental_weight(r))});
  return rs.name() + " fundamental weights in the simple-root basis\n" + table({"", "weight"}, rows);
}

}  // namespace schubss
