#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "terracini/certificates.hpp"
#include "terracini/interpolation.hpp"
#include "terracini/terracini.hpp"

namespace terracini {

using json = nlohmann::ordered_json;

enum class OutputFormat { Table, Json, Csv };

OutputFormat output_format_from_string(const std::string& s);

// "rational" or "prime:<p>".
ArithmeticDomain domain_from_string(const std::string& s);

// Report schema: {query, expected_dim, computed_dim, defect, route,
// trials: [ranks], domain, seed, warnings, ...}. Route "both" nests the
// Segre-side report under "segre".
json to_json(const SecantQuery& q);
SecantQuery query_from_json(const json& j);

json to_json(const DefectReport& rep);
DefectReport report_from_json(const json& j);

json to_json(const RouteComparison& cmp);
RouteComparison comparison_from_json(const json& j);

json to_json(const ScanCell& cell);
json to_json(const InterpResult& res);
json to_json(const DualityResult& res);
json to_json(const V23Report& rep);
json to_json(const CaseCheckInput& input, const CaseVerdict& verdict);

// Flat rows with a shared header, for CSV and table output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table to_table(const DefectReport& rep);
Table to_table(const RouteComparison& cmp);
Table to_table(const std::vector<ScanCell>& cells);
Table to_table(const InterpResult& res);
Table to_table(const DualityResult& res);
Table to_table(const std::vector<V23Report>& reps);

void write_csv(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table);

}  // namespace terracini
