#include "terracini/report_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace terracini {

namespace {

std::string join_ranks(const std::vector<std::size_t>& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? ";" : "") + std::to_string(ranks[i]);
  return s;
}

std::string join_warnings(const std::vector<std::string>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " | " : "") + w[i];
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

ArithmeticDomain domain_from_string(const std::string& s) {
  if (s == "rational") return ArithmeticDomain::rational();
  const std::string prefix = "prime:";
  if (s.rfind(prefix, 0) == 0) return ArithmeticDomain::prime_field(std::stoull(s.substr(prefix.size())));
  if (s == "prime") return ArithmeticDomain::prime_field();
  throw std::invalid_argument("unknown domain '" + s + "'");
}

json to_json(const SecantQuery& q) {
  return json{{"n", q.n},
              {"d", q.d},
              {"h", q.h},
              {"k", q.k},
              {"trials", q.trials},
              {"seed", q.seed},
              {"domain", q.domain.name()},
              {"size_guard", q.size_guard},
              {"reverify_flagged", q.reverify_flagged}};
}

SecantQuery query_from_json(const json& j) {
  SecantQuery q;
  q.n = j.at("n").get<unsigned>();
  q.d = j.at("d").get<unsigned>();
  q.h = j.at("h").get<unsigned>();
  q.k = j.at("k").get<unsigned>();
  q.trials = j.at("trials").get<unsigned>();
  q.seed = j.at("seed").get<std::uint64_t>();
  q.domain = domain_from_string(j.at("domain").get<std::string>());
  q.size_guard = j.at("size_guard").get<std::size_t>();
  q.reverify_flagged = j.at("reverify_flagged").get<bool>();
  return q;
}

json to_json(const DefectReport& rep) {
  json j;
  j["query"] = to_json(rep.query);
  j["expected_dim"] = rep.expected_dim;
  j["computed_dim"] = rep.computed_dim;
  j["defect"] = rep.defect;
  j["route"] = to_string(rep.route);
  j["trials"] = rep.per_trial_ranks;
  j["domain"] = rep.query.domain.name();
  j["seed"] = rep.query.seed;
  j["warnings"] = rep.warnings;
  j["rows"] = rep.rows;
  j["cols"] = rep.cols;
  j["max_rank_observed"] = rep.max_rank_observed;
  j["frame_fiber_dim"] = rep.frame_fiber_dim;
  j["exact_defect"] = rep.exact_defect ? json(*rep.exact_defect) : json(nullptr);
  return j;
}

DefectReport report_from_json(const json& j) {
  DefectReport rep;
  rep.query = query_from_json(j.at("query"));
  rep.expected_dim = j.at("expected_dim").get<long long>();
  rep.computed_dim = j.at("computed_dim").get<long long>();
  rep.defect = j.at("defect").get<long long>();
  rep.route = route_from_string(j.at("route").get<std::string>());
  rep.per_trial_ranks = j.at("trials").get<std::vector<std::size_t>>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  rep.rows = j.at("rows").get<std::size_t>();
  rep.cols = j.at("cols").get<std::size_t>();
  rep.max_rank_observed = j.at("max_rank_observed").get<std::size_t>();
  rep.frame_fiber_dim = j.at("frame_fiber_dim").get<long long>();
  if (!j.at("exact_defect").is_null()) rep.exact_defect = j.at("exact_defect").get<long long>();
  return rep;
}

json to_json(const RouteComparison& cmp) {
  json j = to_json(cmp.direct);
  j["route"] = "both";
  j["agree"] = cmp.agree;
  j["segre"] = to_json(cmp.segre);
  return j;
}

RouteComparison comparison_from_json(const json& j) {
  RouteComparison cmp;
  json direct = j;
  direct["route"] = "direct";
  cmp.direct = report_from_json(direct);
  cmp.segre = report_from_json(j.at("segre"));
  cmp.agree = j.at("agree").get<bool>();
  return cmp;
}

json to_json(const ScanCell& cell) {
  json j{{"d", cell.d}, {"h", cell.h}, {"flagged", cell.flagged()}};
  if (cell.result) j["result"] = to_json(*cell.result);
  j["error"] = cell.error.empty() ? json(nullptr) : json(cell.error);
  return j;
}

json to_json(const InterpResult& res) {
  return json{{"n", res.n},
              {"d", res.d},
              {"points", res.s},
              {"virtual_dim", res.dims.virtual_dim},
              {"expected_dim", res.dims.expected_dim},
              {"actual_dim", res.dims.actual_dim},
              {"special", res.dims.special},
              {"trials", res.per_trial_ranks},
              {"warnings", res.warnings}};
}

json to_json(const DualityResult& res) {
  return json{{"d", res.d},
              {"h", res.h},
              {"r", res.r},
              {"secant_dim", res.secant_dim},
              {"interp_actual_dim", res.interp_actual_dim},
              {"agree", res.agree}};
}

json to_json(const V23Report& rep) {
  return json{{"seed", rep.seed},
              {"domain", rep.domain},
              {"resamples", rep.resamples},
              {"rows", rep.rows},
              {"cols", rep.cols},
              {"rank", rep.rank},
              {"segre_expected_dim", rep.segre_expected_dim},
              {"segre_computed_dim", rep.segre_computed_dim},
              {"defect", rep.defect},
              {"certificate_count", rep.certificate_count},
              {"certificate_verified", rep.certificate_verified},
              {"fixed_conic_divides", rep.fixed_conic_divides},
              {"moving_lines_through_points", rep.moving_lines_through_points},
              {"conic", rep.conic},
              {"residual_lines", rep.residual_lines},
              {"passed", rep.passed()}};
}

json to_json(const CaseCheckInput& input, const CaseVerdict& verdict) {
  return json{{"d", input.d},
              {"m", input.m},
              {"h", input.h},
              {"delta", input.delta},
              {"verdict", verdict.consistent ? "consistent" : "contradiction"},
              {"violated", verdict.violated ? json(to_string(*verdict.violated)) : json(nullptr)}};
}

Table to_table(const DefectReport& rep) {
  Table t;
  t.header = {"n", "d", "k", "h", "route", "expected_dim", "computed_dim", "defect", "rows", "cols", "ranks",
              "exact_defect", "domain", "seed", "warnings"};
  const auto& q = rep.query;
  t.rows.push_back({std::to_string(q.n), std::to_string(q.d), std::to_string(q.k), std::to_string(q.h),
                    to_string(rep.route), std::to_string(rep.expected_dim), std::to_string(rep.computed_dim),
                    std::to_string(rep.defect), std::to_string(rep.rows), std::to_string(rep.cols),
                    join_ranks(rep.per_trial_ranks), rep.exact_defect ? std::to_string(*rep.exact_defect) : "-",
                    q.domain.name(), std::to_string(q.seed), join_warnings(rep.warnings)});
  return t;
}

Table to_table(const RouteComparison& cmp) {
  Table t = to_table(cmp.direct);
  t.rows.push_back(to_table(cmp.segre).rows.front());
  t.header.push_back("agree");
  for (auto& row : t.rows) row.push_back(yes_no(cmp.agree));
  return t;
}

Table to_table(const std::vector<ScanCell>& cells) {
  Table t;
  t.header = {"d", "h", "expected_dim", "computed_dim", "direct_defect", "segre_expected_dim", "segre_computed_dim",
              "segre_defect", "agree", "flagged", "error"};
  for (const auto& c : cells) {
    if (c.result) {
      const auto& r = *c.result;
      t.rows.push_back({std::to_string(c.d), std::to_string(c.h), std::to_string(r.direct.expected_dim),
                        std::to_string(r.direct.computed_dim), std::to_string(r.direct.defect),
                        std::to_string(r.segre.expected_dim), std::to_string(r.segre.computed_dim),
                        std::to_string(r.segre.defect), yes_no(r.agree), yes_no(c.flagged()), ""});
    } else {
      t.rows.push_back({std::to_string(c.d), std::to_string(c.h), "-", "-", "-", "-", "-", "-", "-", "no", c.error});
    }
  }
  return t;
}

Table to_table(const InterpResult& res) {
  Table t;
  t.header = {"n", "d", "points", "virtual_dim", "expected_dim", "actual_dim", "special", "ranks", "warnings"};
  t.rows.push_back({std::to_string(res.n), std::to_string(res.d), std::to_string(res.s),
                    std::to_string(res.dims.virtual_dim), std::to_string(res.dims.expected_dim),
                    std::to_string(res.dims.actual_dim), yes_no(res.dims.special), join_ranks(res.per_trial_ranks),
                    join_warnings(res.warnings)});
  return t;
}

Table to_table(const DualityResult& res) {
  Table t;
  t.header = {"d", "h", "r", "secant_dim", "interp_actual_dim", "agree"};
  t.rows.push_back({std::to_string(res.d), std::to_string(res.h), std::to_string(res.r),
                    std::to_string(res.secant_dim), std::to_string(res.interp_actual_dim), yes_no(res.agree)});
  return t;
}

Table to_table(const std::vector<V23Report>& reps) {
  Table t;
  t.header = {"seed", "rank", "segre_expected_dim", "segre_computed_dim", "defect", "certificates", "verified",
              "fixed_conic", "moving_lines", "resamples", "passed"};
  for (const auto& r : reps)
    t.rows.push_back({std::to_string(r.seed), std::to_string(r.rank), std::to_string(r.segre_expected_dim),
                      std::to_string(r.segre_computed_dim), std::to_string(r.defect),
                      std::to_string(r.certificate_count), yes_no(r.certificate_verified),
                      yes_no(r.fixed_conic_divides), yes_no(r.moving_lines_through_points),
                      std::to_string(r.resamples), yes_no(r.passed())});
  return t;
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void write_table(std::ostream& out, const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

}  // namespace terracini
