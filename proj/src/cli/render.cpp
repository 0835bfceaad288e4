#include <sstream>

#include "efx/cli.hpp"

namespace efx::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string allocation_text(const std::vector<std::vector<int>>& bundles) {
  std::string out = "(";
  for (std::size_t k = 0; k < bundles.size(); ++k) {
    if (k) out += " | ";
    if (bundles[k].empty()) out += "{}";
    for (int g : bundles[k]) out += std::to_string(g);
  }
  return out + ")";
}

void render_csv(const CommandResult& r, std::ostream& out) {
  out << "command,claim,universe,checked,verdict,finding,witnesses,elapsed_ms\n";
  for (const auto& rep : r.reports) {
    out << csv_field(r.command) << ',' << csv_field(rep.claim) << ',' << csv_field(rep.universe) << ','
        << rep.checked << ',' << rep.verdict() << ',' << csv_field(rep.finding) << ',' << rep.witnesses.size()
        << ',' << (rep.elapsed_ms ? std::to_string(*rep.elapsed_ms) : "") << '\n';
  }
  if (r.tables.empty()) return;
  out << "\ntable,row,column,value\n";
  for (const auto& t : r.tables)
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t c = 0; c < t.rows[i].size(); ++c)
        out << csv_field(t.id) << ',' << i << ',' << csv_field(c < t.header.size() ? t.header[c] : "") << ','
            << csv_field(t.rows[i][c]) << '\n';
}

void render_markdown(const CommandResult& r, std::ostream& out) {
  out << "# " << r.command << "\n\n";
  for (const auto& note : r.notes) out << "> " << note << "\n";
  if (!r.notes.empty()) out << "\n";

  for (const auto& t : r.tables) {
    out << "## Table " << t.id << ": " << t.title << "\n\n|";
    for (const auto& h : t.header) out << ' ' << md_cell(h) << " |";
    out << "\n|";
    for (std::size_t c = 0; c < t.header.size(); ++c) out << "---|";
    out << "\n";
    for (const auto& row : t.rows) {
      out << "|";
      for (const auto& cell : row) out << ' ' << md_cell(cell) << " |";
      out << "\n";
    }
    for (const auto& note : t.notes) out << "\n" << note << "\n";
    out << "\n" << (t.diffs.empty() ? "No cell diffs." : "Cell diffs:") << "\n";
    for (const auto& d : t.diffs) out << "- " << d << "\n";
    out << "\n";
  }

  for (const auto& rep : r.reports) {
    out << "## " << rep.claim << ": " << (rep.passed ? "PASS" : "FAIL") << "\n\n";
    out << "- universe: " << rep.universe << "\n";
    out << "- checked: " << rep.checked << "\n";
    out << "- finding: " << rep.finding << "\n";
    if (rep.elapsed_ms) out << "- elapsed: " << *rep.elapsed_ms << " ms\n";
    if (!rep.breakdown.empty()) {
      out << "\n| breakdown | counts |\n|---|---|\n";
      for (const auto& [row, cols] : rep.breakdown) {
        std::string cells;
        for (const auto& [col, n] : cols) cells += (cells.empty() ? "" : ", ") + col + "=" + std::to_string(n);
        out << "| " << md_cell(row) << " | " << md_cell(cells) << " |\n";
      }
    }
    if (!rep.witnesses.empty()) {
      out << "\nWitnesses:\n";
      for (const auto& w : rep.witnesses) {
        out << "- ";
        if (!w.allocation.empty()) out << allocation_text(w.allocation);
        if (w.agent_i) out << " i=" << *w.agent_i;
        if (w.agent_j) out << " j=" << *w.agent_j;
        if (w.good_g) out << " g=" << *w.good_g;
        if (!w.lhs.empty() || !w.rhs.empty()) out << " " << w.lhs << (w.rhs.empty() ? "" : " vs " + w.rhs);
        out << "\n";
      }
    }
    out << "\n";
  }
}

}  // namespace

std::string render(const CommandResult& r, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json: out << result_to_json(r).dump(2) << "\n"; break;
    case Format::csv: render_csv(r, out); break;
    case Format::markdown: render_markdown(r, out); break;
  }
  return out.str();
}

}  // namespace efx::cli
