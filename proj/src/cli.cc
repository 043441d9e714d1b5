// Copyright 2026 The gridmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridmean/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gridmean/grid_stats.h"
#include "gridmean/identities.h"
#include "gridmean/oracle.h"
#include "gridmean/parallel.h"

namespace gridmean::cli {

namespace {

using Json = nlohmann::ordered_json;

Json fraction_json(const Rational& r) {
  return Json{{"numerator", r.numerator().get_str()}, {"denominator", r.denominator().get_str()}};
}

unsigned long parse_ulong(std::string_view text, std::string_view whole) {
  unsigned long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid range '" + std::string(whole) + "'");
  }
  return value;
}

struct Settings {
  unsigned long digits = 10;
  Format format = Format::csv;
  std::uint64_t budget = 0;  // 0: per-level defaults
  unsigned jobs = 0;
};

EnumerationBudget budget_for(const Settings& s, EnumerationLevel level) {
  EnumerationBudget b = level == EnumerationLevel::placement ? EnumerationBudget::placement()
                                                             : EnumerationBudget::shape();
  if (s.budget != 0) b.max_boxes = s.budget;
  return b;
}

void emit(std::ostream& out, const Settings& s, const OutputRecord& record) {
  if (s.format == Format::json) {
    out << to_json(record) << '\n';
  } else {
    out << csv_header(record) << '\n' << to_csv(record) << '\n';
  }
}

void emit_table(std::ostream& out, const Settings& s, const std::vector<ConvergenceRow>& rows,
                bool enclosures) {
  if (s.format == Format::csv) out << table_header(enclosures) << '\n';
  for (const ConvergenceRow& row : rows) {
    out << (s.format == Format::json ? to_json(row, s.digits) : to_csv(row, s.digits)) << '\n';
  }
}

OutputRecord rational_record(std::string kind, std::vector<std::pair<std::string, long>> params,
                             Rational value, unsigned long digits) {
  OutputRecord r;
  r.kind = std::move(kind);
  r.parameters = std::move(params);
  r.decimal = to_decimal(value, digits);
  r.exact = std::move(value);
  return r;
}

// ---- ratio / limit / edge-ratio ----

int cmd_ratio(const Settings& s, const std::string& kind, unsigned long n, unsigned long m,
              std::ostream& out) {
  const GridSpec g(n, m);
  Rational value = kind == "cuboid" ? q_ratio_closed(g) : r_ratio_sum(g);
  emit(out, s,
       rational_record("ratio." + kind, {{"n", n}, {"m", m}, {"digits", s.digits}},
                       std::move(value), s.digits));
  return kExitOk;
}

int cmd_limit(const Settings& s, const std::string& kind, unsigned long n, std::ostream& out) {
  Rational value = kind == "cuboid" ? q_limit(n) : r_limit(n);
  emit(out, s,
       rational_record("limit." + kind, {{"n", n}, {"digits", s.digits}}, std::move(value),
                       s.digits));
  return kExitOk;
}

int cmd_edge_ratio(const Settings& s, unsigned long n, std::ostream& out) {
  const ConvergenceRow row = make_row(n, edge_ratio_bounds(n, s.digits), Rational(1, 4));
  const RootBound& bound = std::get<RootBound>(row.value);
  OutputRecord r;
  r.kind = "edge-ratio";
  r.parameters = {{"n", n}, {"digits", s.digits}};
  if (bound.is_exact()) r.exact = bound.lo;
  r.enclosure = bound;
  r.gap = {row.gap_lo, row.gap_hi};
  r.decimal = to_decimal(bound.lo, s.digits);
  emit(out, s, r);
  return kExitOk;
}

// ---- converge ----

// Side-of-limit and enclosure checks that every row of a sweep must pass.
bool row_certified(const std::string& kind, const ConvergenceRow& row,
                   const std::function<Rational(unsigned long)>& radicand) {
  if (row.is_enclosure()) {
    if (!encloses(std::get<RootBound>(row.value), radicand(row.index))) return false;
  }
  if (kind == "cuboid") return row.lower_value() > row.limit;  // (m+2)/(3m) > 1/3
  if (kind == "edge-ratio") return row.upper_value() > row.limit;
  if (kind == "central-binomial") return row.lower_value() < row.limit;
  return row.gap_lo >= 0;
}

int cmd_converge(const Settings& s, const std::string& kind, std::optional<unsigned long> n,
                 const Range& range, const std::string& variant, std::ostream& out,
                 std::ostream& err) {
  const std::vector<unsigned long> idx = range.values();
  if (idx.front() == 0) throw UsageError("converge ranges start at 1");

  std::vector<ConvergenceRow> rows;
  std::function<Rational(unsigned long)> radicand;
  bool enclosures = false;
  if (kind == "cuboid" || kind == "cube") {
    if (!n) throw UsageError("converge " + kind + " needs --n (the range runs over m)");
    if (*n == 0) throw UsageError("--n must be >= 1");
    rows = kind == "cuboid" ? cuboid_convergence(*n, idx, s.jobs)
                            : cube_convergence(*n, idx, s.jobs);
  } else if (kind == "edge-ratio") {
    enclosures = true;
    rows = edge_ratio_convergence(idx, s.digits, s.jobs);
    radicand = [](unsigned long k) { return r_limit(k); };
  } else {
    enclosures = true;
    const CentralBinomial which = variant == "odd" ? CentralBinomial::odd : CentralBinomial::even;
    rows = nth_root_convergence(idx, s.digits, which, s.jobs);
    radicand = [which](unsigned long k) { return Rational(central_binomial(k, which)); };
  }

  emit_table(out, s, rows, enclosures);

  int status = kExitOk;
  for (const ConvergenceRow& row : rows) {
    if (!row_certified(kind, row, radicand)) {
      err << "FAIL converge " << kind << " index=" << row.index << ": certified check failed\n";
      status = kExitVerificationFailed;
    }
  }
  return status;
}

// ---- verify ----

struct CaseResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

CaseResult from_report(std::string label, const VerificationReport& r) {
  CaseResult c{std::move(label), r.passed, {}};
  if (!r.passed) {
    c.detail = "lhs=" + r.lhs.to_string() +
               (r.relation == Relation::equal ? " != " : " > ") + "rhs=" + r.rhs.to_string();
  }
  return c;
}

CaseResult equality(std::string label, const Rational& lhs, const Rational& rhs) {
  return from_report(std::move(label), make_report(0, lhs, Relation::equal, rhs));
}

using CaseList = std::vector<std::vector<CaseResult>>;

CaseList verify_prop1(const std::vector<unsigned long>& ns, unsigned jobs) {
  return parallel_map<std::vector<CaseResult>>(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    return std::vector<CaseResult>{
        equality("n=" + std::to_string(n), alternating_sum(n), prop1_rhs(n))};
  });
}

CaseList verify_beta(const std::vector<unsigned long>& ns, unsigned jobs) {
  return parallel_map<std::vector<CaseResult>>(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    const std::string tag = "n=" + std::to_string(n);
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational integral = beta_integral_exact(n);
    return std::vector<CaseResult>{
        equality(tag + " integral", integral, sign * prop1_rhs(n)),
        equality(tag + " termwise", integral, sign * alternating_sum(n)),
        from_report(tag + " factorial", beta_factorial_identity_check(n)),
    };
  });
}

CaseList verify_prop2_bounds(const std::vector<unsigned long>& ns, unsigned jobs) {
  return parallel_map<std::vector<CaseResult>>(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    const auto [lower, upper] = central_binomial_bounds_check(n);
    return std::vector<CaseResult>{from_report("n=" + std::to_string(n) + " lower", lower),
                                   from_report("n=" + std::to_string(n) + " upper", upper)};
  });
}

CaseList verify_prop2_ratio(const std::vector<unsigned long>& ns, unsigned jobs) {
  return parallel_map<std::vector<CaseResult>>(ns.size(), jobs, [&](std::size_t i) {
    return std::vector<CaseResult>{
        from_report("n=" + std::to_string(ns[i]), binom_ratio_identity_check(ns[i]))};
  });
}

CaseList verify_oracle(const Settings& s, const std::vector<unsigned long>& ns,
                       const std::vector<unsigned long>& ms) {
  std::vector<GridSpec> grids;
  for (unsigned long n : ns) {
    for (unsigned long m : ms) grids.emplace_back(n, m);
  }
  const EnumerationBudget placement = budget_for(s, EnumerationLevel::placement);
  const EnumerationBudget shape = budget_for(s, EnumerationLevel::shape);
  // Fail fast on budget before spending time on smaller grids.
  for (const GridSpec& g : grids) {
    for (BoxKind kind : {BoxKind::cuboid, BoxKind::cube}) {
      if (predicted_enumeration_size(g, kind, EnumerationLevel::placement) > placement.max_boxes ||
          predicted_enumeration_size(g, kind, EnumerationLevel::shape) > shape.max_boxes) {
        throw UsageError("oracle grid n=" + std::to_string(g.n()) + " m=" +
                         std::to_string(g.m()) + " exceeds the enumeration budget");
      }
    }
  }

  return parallel_map<std::vector<CaseResult>>(grids.size(), s.jobs, [&](std::size_t i) {
    const GridSpec& g = grids[i];
    const std::string tag = "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m());
    const Rational q = q_ratio_closed(g);
    const Rational r = r_ratio_sum(g);
    return std::vector<CaseResult>{
        equality(tag + " cuboid placement", cuboid_mean_bruteforce(g, placement), q),
        equality(tag + " cuboid shape", cuboid_mean_bruteforce(g, shape), q),
        equality(tag + " cube placement", cube_mean_bruteforce(g, placement), r),
        equality(tag + " cube shape", cube_mean_bruteforce(g, shape), r),
        equality(tag + " cube binomial route", r_ratio_binomial(g), r),
        equality(tag + " cuboid count", Rational(count_bruteforce(g, BoxKind::cuboid, placement)),
                 Rational(total_cuboids(g))),
        equality(tag + " cube count", Rational(count_bruteforce(g, BoxKind::cube, placement)),
                 Rational(total_cubes(g))),
    };
  });
}

// Prints failures to err and one summary line to out; returns failed count.
std::size_t report_suite(const Settings& s, const std::string& suite, const CaseList& cases,
                         std::ostream& out, std::ostream& err) {
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& group : cases) {
    for (const CaseResult& c : group) {
      ++total;
      if (!c.passed) {
        ++failed;
        err << "FAIL " << suite << ' ' << c.label << ": " << c.detail << '\n';
      }
    }
  }
  if (s.format == Format::json) {
    out << Json{{"suite", suite}, {"cases", total}, {"passed", total - failed}, {"failed", failed}}
               .dump()
        << '\n';
  } else {
    out << suite << ',' << total << ',' << total - failed << ',' << failed << '\n';
  }
  return failed;
}

int cmd_verify(const Settings& s, const std::string& suite, const std::optional<Range>& range,
               const std::optional<Range>& m_range, std::ostream& out, std::ostream& err) {
  const bool all = suite == "all";
  auto n_values = [&](unsigned long lo, unsigned long hi) {
    std::vector<unsigned long> ns = range ? range->values() : Range{lo, hi, 1}.values();
    if (lo == 1) {
      if (!all && ns.front() == 0) throw UsageError(suite + " needs n >= 1");
      std::erase(ns, 0UL);
    }
    return ns;
  };

  std::vector<std::pair<std::string, std::function<CaseList()>>> plan;
  if (all || suite == "prop1") {
    plan.emplace_back("prop1", [&] { return verify_prop1(n_values(0, 200), s.jobs); });
  }
  if (all || suite == "beta") {
    plan.emplace_back("beta", [&] { return verify_beta(n_values(0, 100), s.jobs); });
  }
  if (all || suite == "prop2-bounds") {
    plan.emplace_back("prop2-bounds",
                      [&] { return verify_prop2_bounds(n_values(1, 1000), s.jobs); });
  }
  if (all || suite == "prop2-ratio") {
    plan.emplace_back("prop2-ratio",
                      [&] { return verify_prop2_ratio(n_values(1, 1000), s.jobs); });
  }
  if (all || suite == "oracle") {
    plan.emplace_back("oracle", [&] {
      // Under "all" the --range targets the identity suites.
      std::vector<unsigned long> ns =
          (range && !all) ? range->values() : Range{1, 3, 1}.values();
      std::vector<unsigned long> ms = m_range ? m_range->values() : Range{1, 6, 1}.values();
      if (ns.front() == 0 || ms.front() == 0) throw UsageError("oracle needs n, m >= 1");
      return verify_oracle(s, ns, ms);
    });
  }

  // Run everything before printing so a usage error leaves no partial output.
  std::vector<CaseList> results;
  for (auto& [name, run_suite] : plan) results.push_back(run_suite());

  if (s.format == Format::csv) out << "suite,cases,passed,failed\n";
  std::size_t failed = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    failed += report_suite(s, plan[i].first, results[i], out, err);
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

// ---- Range ----

Range Range::parse(std::string_view text) {
  Range r;
  std::string_view body = text;
  if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    r.step = parse_ulong(body.substr(colon + 1), text);
    body = body.substr(0, colon);
  }
  if (const auto dots = body.find(".."); dots != std::string_view::npos) {
    r.start = parse_ulong(body.substr(0, dots), text);
    r.end = parse_ulong(body.substr(dots + 2), text);
  } else {
    r.start = r.end = parse_ulong(body, text);
  }
  if (r.step == 0) throw UsageError("range step must be >= 1 in '" + std::string(text) + "'");
  if (r.start > r.end) throw UsageError("range start exceeds end in '" + std::string(text) + "'");
  return r;
}

std::vector<unsigned long> Range::values() const {
  std::vector<unsigned long> out;
  for (unsigned long v = start; v <= end; v += step) {
    out.push_back(v);
    if (end - v < step) break;
  }
  return out;
}

// ---- formatting ----

std::string to_json(const OutputRecord& record) {
  Json j;
  j["kind"] = record.kind;
  Json params = Json::object();
  for (const auto& [name, value] : record.parameters) params[name] = value;
  j["parameters"] = params;
  if (record.exact) j["exact"] = fraction_json(*record.exact);
  if (record.enclosure) {
    j["enclosure"] = Json{{"lo", fraction_json(record.enclosure->lo)},
                          {"hi", fraction_json(record.enclosure->hi)}};
  }
  if (record.gap) {
    j["gap"] = Json{{"lo", fraction_json(record.gap->first)},
                    {"hi", fraction_json(record.gap->second)}};
  }
  j["decimal"] = record.decimal;
  return j.dump();
}

std::string csv_header(const OutputRecord& record) {
  std::string h = "kind";
  for (const auto& [name, value] : record.parameters) h += "," + name;
  h += ",num,den,decimal";
  if (record.enclosure) h += ",hi_num,hi_den";
  if (record.gap) h += ",gap_num,gap_den,gap_hi_num,gap_hi_den";
  return h;
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  os << record.kind;
  for (const auto& [name, value] : record.parameters) os << ',' << value;
  const Rational& shown = record.exact ? *record.exact : record.enclosure.value().lo;
  os << ',' << shown.numerator().get_str() << ',' << shown.denominator().get_str() << ','
     << record.decimal;
  if (record.enclosure) {
    os << ',' << record.enclosure->hi.numerator().get_str() << ','
       << record.enclosure->hi.denominator().get_str();
  }
  if (record.gap) {
    os << ',' << record.gap->first.numerator().get_str() << ','
       << record.gap->first.denominator().get_str() << ','
       << record.gap->second.numerator().get_str() << ','
       << record.gap->second.denominator().get_str();
  }
  return os.str();
}

std::string table_header(bool enclosures) {
  std::string h = "index,num,den,decimal,gap_num,gap_den";
  if (enclosures) h += ",hi_num,hi_den,gap_hi_num,gap_hi_den";
  return h;
}

namespace {

std::vector<std::pair<std::string, std::string>> row_fields(const ConvergenceRow& row,
                                                            unsigned long digits) {
  const Rational& lo = row.lower_value();
  std::vector<std::pair<std::string, std::string>> f{
      {"index", std::to_string(row.index)},
      {"num", lo.numerator().get_str()},
      {"den", lo.denominator().get_str()},
      {"decimal", to_decimal(lo, digits)},
      {"gap_num", row.gap_lo.numerator().get_str()},
      {"gap_den", row.gap_lo.denominator().get_str()},
  };
  if (row.is_enclosure()) {
    const Rational& hi = row.upper_value();
    f.emplace_back("hi_num", hi.numerator().get_str());
    f.emplace_back("hi_den", hi.denominator().get_str());
    f.emplace_back("gap_hi_num", row.gap_hi.numerator().get_str());
    f.emplace_back("gap_hi_den", row.gap_hi.denominator().get_str());
  }
  return f;
}

}  // namespace

std::string to_csv(const ConvergenceRow& row, unsigned long digits) {
  std::string line;
  for (const auto& [name, value] : row_fields(row, digits)) {
    if (!line.empty()) line += ',';
    line += value;
  }
  return line;
}

std::string to_json(const ConvergenceRow& row, unsigned long digits) {
  Json j;
  for (const auto& [name, value] : row_fields(row, digits)) {
    if (name == "index") {
      j[name] = row.index;
    } else {
      j[name] = value;
    }
  }
  return j.dump();
}

// ---- entry point ----

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mean-volume statistics of grid-aligned boxes in a subdivided hypercube",
               "gridmean"};
  app.require_subcommand(1);

  Settings s;
  std::string format = "csv";
  app.add_option("--digits", s.digits, "Fractional digits for decimals and root enclosures")
      ->check(CLI::Range(1UL, 100000UL));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--budget", s.budget, "Enumeration budget for the oracle suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", s.jobs, "Worker threads (default: available parallelism)");

  std::string kind;
  std::string suite;
  std::string variant = "even";
  std::optional<unsigned long> n;
  std::optional<unsigned long> m;
  std::string range_text;
  std::string m_range_text;

  auto* ratio = app.add_subcommand("ratio", "Exact q_n(m) (cuboid) or r_n(m) (cube)");
  ratio->add_option("kind", kind)->required()->check(CLI::IsMember({"cuboid", "cube"}));
  ratio->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--m", m, "Subdivisions per edge")->required()->check(CLI::PositiveNumber);

  auto* limit = app.add_subcommand("limit", "Limit of the ratio as m grows");
  limit->add_option("kind", kind)->required()->check(CLI::IsMember({"cuboid", "cube"}));
  limit->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);

  auto* converge = app.add_subcommand("converge", "Convergence table towards the limit");
  converge->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"cuboid", "cube", "edge-ratio", "central-binomial"}));
  converge->add_option("--n", n, "Dimension, for cuboid/cube sweeps over m");
  converge->add_option("--range", range_text, "start..end[:step]")->required();
  converge->add_option("--variant", variant, "central-binomial: even C(2n,n), odd C(2n+1,n)")
      ->check(CLI::IsMember({"even", "odd"}));

  auto* verify = app.add_subcommand("verify", "Exact verification sweeps");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"prop1", "beta", "prop2-bounds", "prop2-ratio", "oracle", "all"}));
  verify->add_option("--range", range_text, "n range, start..end[:step]");
  verify->add_option("--m-range", m_range_text, "m range for the oracle suite");

  auto* edge = app.add_subcommand("edge-ratio", "Enclosure of r_n^(1/n) and its distance to 1/4");
  edge->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);

  for (auto* sub : {ratio, limit, converge, verify, edge}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  s.format = format == "json" ? Format::json : Format::csv;

  try {
    if (ratio->parsed()) return cmd_ratio(s, kind, *n, *m, out);
    if (limit->parsed()) return cmd_limit(s, kind, *n, out);
    if (edge->parsed()) return cmd_edge_ratio(s, *n, out);
    if (converge->parsed()) {
      return cmd_converge(s, kind, n, Range::parse(range_text), variant, out, err);
    }
    std::optional<Range> range;
    std::optional<Range> m_range;
    if (!range_text.empty()) range = Range::parse(range_text);
    if (!m_range_text.empty()) m_range = Range::parse(m_range_text);
    return cmd_verify(s, suite, range, m_range, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gridmean::cli
