#include "efx/cli.hpp"

namespace efx::cli {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

json report_to_json(const VerdictReport& r) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) {
    witnesses.push_back({{"allocation", w.allocation},
                         {"agent_i", optional_int(w.agent_i)},
                         {"agent_j", optional_int(w.agent_j)},
                         {"good_g", optional_int(w.good_g)},
                         {"lhs", w.lhs},
                         {"rhs", w.rhs}});
  }
  json breakdown = json::object();
  for (const auto& [row, cols] : r.breakdown) {
    json inner = json::object();
    for (const auto& [col, count] : cols) inner[col] = count;
    breakdown[row] = std::move(inner);
  }
  return {{"claim", r.claim},
          {"universe", r.universe},
          {"checked", r.checked},
          {"verdict", r.verdict()},
          {"finding", r.finding},
          {"witnesses", std::move(witnesses)},
          {"breakdown", std::move(breakdown)},
          {"elapsed_ms", r.elapsed_ms ? json(*r.elapsed_ms) : json(nullptr)}};
}

VerdictReport report_from_json(const json& j) {
  VerdictReport r;
  r.claim = j.at("claim").get<std::string>();
  r.universe = j.at("universe").get<std::string>();
  r.checked = j.at("checked").get<std::uint64_t>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail")
    throw json::other_error::create(501, "verdict must be \"pass\" or \"fail\"", &j);
  r.passed = verdict == "pass";
  r.finding = j.value("finding", std::string{});
  for (const json& w : j.at("witnesses")) {
    r.witnesses.push_back({w.at("allocation").get<std::vector<std::vector<int>>>(), read_optional_int(w, "agent_i"),
                           read_optional_int(w, "agent_j"), read_optional_int(w, "good_g"),
                           w.value("lhs", std::string{}), w.value("rhs", std::string{})});
  }
  for (const auto& [row, cols] : j.at("breakdown").items())
    for (const auto& [col, count] : cols.items()) r.breakdown[row][col] = count.get<std::uint64_t>();
  if (j.contains("elapsed_ms") && !j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

json table_to_json(const TableArtifact& t) {
  return {{"id", t.id}, {"title", t.title}, {"header", t.header},
          {"rows", t.rows}, {"diffs", t.diffs}, {"notes", t.notes}};
}

json result_to_json(const CommandResult& r) {
  json out = {{"command", r.command}, {"reports", json::array()}};
  for (const auto& rep : r.reports) out["reports"].push_back(report_to_json(rep));
  if (!r.tables.empty()) {
    out["tables"] = json::array();
    for (const auto& t : r.tables) out["tables"].push_back(table_to_json(t));
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  out["exit_code"] = r.exit_code;
  return out;
}

}  // namespace efx::cli
