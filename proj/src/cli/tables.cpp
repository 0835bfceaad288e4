#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "efx/cli.hpp"

namespace efx::cli {

namespace {

constexpr ItemType kTypeOrder[] = {ItemType::A, ItemType::B, ItemType::C, ItemType::X, ItemType::Y};
const std::vector<std::string> kTypeHeader = {"", "A", "B", "C", "x", "y"};

using Grid = std::vector<std::vector<std::string>>;

// Expected cells, row-major in the layout the tables are printed in.
const Grid kPairRanks[kAgents] = {
    {{"A", "1", "2", "2", "4", "6"},
     {"B", "2", "1", "5", "1", "3"},
     {"C", "2", "5", "1", "1", "3"},
     {"x", "4", "1", "1", "--", "1"},
     {"y", "6", "3", "3", "1", "--"}},
    {{"A", "1", "5", "2", "1", "3"},
     {"B", "5", "1", "2", "1", "3"},
     {"C", "2", "2", "1", "4", "6"},
     {"x", "1", "1", "4", "--", "1"},
     {"y", "3", "3", "6", "1", "--"}},
    {{"A", "1", "2", "5", "1", "3"},
     {"B", "2", "1", "2", "4", "6"},
     {"C", "5", "2", "1", "1", "3"},
     {"x", "1", "4", "1", "--", "1"},
     {"y", "3", "6", "3", "1", "--"}},
};

const Grid kExceptionalAgent0 = {
    {"ABC", "012, 015, 024, 045, 123, 135, 234, 345"},
    {"BCx", "126, 156, 246, 456"},
};

const Grid kExceptionalAll = {
    {"0,1,2", "ABC", "012, 015, 024, 045, 123, 135, 234, 345"},
    {"0", "BCx", "126, 156, 246, 456"},
    {"1", "ABx", "016, 046, 136, 346"},
    {"2", "ACx", "026, 056, 236, 356"},
};

const Grid kSupportTable = {
    {"0", "0", "∅"},
    {"1", "21, 23, 28, 31, 35", "x, A, B, C, y, xy, Bx, Cx"},
    {"2", "36", "AB, AC"},
    {"3", "37, 40", "By, Cy, Bxy, Cxy"},
    {"4", "41, 45", "Ax, ABx, ACx"},
    {"5", "46", "BC, BCy"},
    {"6", "47, 48", "Ay, Axy, ABy, ACy, ABxy, ACxy"},
    {"7", "49", "ABC, ABCx, ABCy, ABCxy, BCx, BCxy"},
};

const std::string kLadder = "0<21≤35<36<37≤40<41≤45<46<47≤48<49";

std::vector<std::string> split_list(const std::string& cell) {
  std::vector<std::string> out;
  std::stringstream in(cell);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// List cells compare as sets; the builtin orders them by hand.
void diff_grid(const Grid& expected, const TableArtifact& t, std::vector<std::string>* diffs) {
  if (expected.size() != t.rows.size()) {
    diffs->push_back("row count: expected " + std::to_string(expected.size()) + ", computed " +
                     std::to_string(t.rows.size()));
    return;
  }
  for (std::size_t r = 0; r < expected.size(); ++r) {
    const auto& want = expected[r];
    const auto& got = t.rows[r];
    for (std::size_t c = 0; c < std::max(want.size(), got.size()); ++c) {
      const std::string w = c < want.size() ? want[c] : "";
      const std::string g = c < got.size() ? got[c] : "";
      if (split_list(w) == split_list(g)) continue;
      const std::string col = c < t.header.size() && !t.header[c].empty() ? t.header[c] : std::to_string(c);
      diffs->push_back("row " + (want.empty() ? std::to_string(r) : want[0]) + ", column " + col +
                       ": expected '" + w + "', computed '" + g + "'");
    }
  }
}

std::string triple_cell(const std::vector<Bundle>& triples) {
  std::vector<std::string> words;
  for (Bundle b : triples) words.push_back(b.digits());
  std::sort(words.begin(), words.end());
  return join(words);
}

TableArtifact pair_rank_table(int agent, std::string id, std::string title) {
  TableArtifact t{std::move(id), std::move(title), kTypeHeader, {}, {}, {}};
  for (ItemType a : kTypeOrder) {
    std::vector<std::string> row = {std::string(1, type_char(a))};
    for (ItemType b : kTypeOrder) {
      std::set<int> ranks;
      for (int g = 0; g < kGoods; ++g)
        for (int h = g + 1; h < kGoods; ++h) {
          const auto tg = type_of(static_cast<GoodId>(g)), th = type_of(static_cast<GoodId>(h));
          if ((tg == a && th == b) || (tg == b && th == a))
            ranks.insert(rank_for_agent(agent, Bundle({g, h})));
        }
      std::string cell;
      for (int r : ranks) cell += (cell.empty() ? "" : "/") + std::to_string(r);
      row.push_back(ranks.empty() ? "--" : cell);
    }
    t.rows.push_back(std::move(row));
  }
  diff_grid(kPairRanks[agent], t, &t.diffs);
  return t;
}

// Rank-7 triples of one agent, grouped by type support word.
std::map<std::string, std::vector<Bundle>> top_triples(int agent) {
  std::map<std::string, std::vector<Bundle>> out;
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    if (s.size() == 3 && rank_for_agent(agent, s) == kBuiltinTopRank) out[support_of(s).word()].push_back(s);
  }
  return out;
}

TableArtifact exceptional_agent0() {
  TableArtifact t{"2", "Exceptional triples of r0 (rank 7)", {"Type", "Triples"}, {}, {}, {}};
  for (const auto& [word, triples] : top_triples(0)) t.rows.push_back({word, triple_cell(triples)});
  // Print the all-agent row first.
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
    return (a[0] == "ABC") > (b[0] == "ABC");
  });
  diff_grid(kExceptionalAgent0, t, &t.diffs);
  return t;
}

TableArtifact exceptional_all() {
  TableArtifact t{"5", "Exceptional triples for all three agents", {"Agent", "Type", "Exceptional triples"}, {}, {}, {}};
  std::array<std::map<std::string, std::vector<Bundle>>, kAgents> per_agent;
  for (int i = 0; i < kAgents; ++i) per_agent[static_cast<std::size_t>(i)] = top_triples(i);
  std::set<Bundle> common;
  for (const auto& [word, triples] : per_agent[0])
    for (Bundle b : triples) {
      bool everywhere = true;
      for (int i = 1; i < kAgents; ++i) {
        const auto& other = per_agent[static_cast<std::size_t>(i)];
        const auto it = other.find(word);
        everywhere = everywhere && it != other.end() && std::count(it->second.begin(), it->second.end(), b);
      }
      if (everywhere) common.insert(b);
    }
  std::map<std::string, std::vector<Bundle>> shared;
  for (Bundle b : common) shared[support_of(b).word()].push_back(b);
  for (const auto& [word, triples] : shared) t.rows.push_back({"0,1,2", word, triple_cell(triples)});
  for (int i = 0; i < kAgents; ++i)
    for (const auto& [word, triples] : per_agent[static_cast<std::size_t>(i)]) {
      std::vector<Bundle> own;
      for (Bundle b : triples)
        if (!common.count(b)) own.push_back(b);
      if (!own.empty()) t.rows.push_back({std::to_string(i), word, triple_cell(own)});
    }
  diff_grid(kExceptionalAll, t, &t.diffs);
  return t;
}

TableArtifact support_table() {
  TableArtifact t{"4", "Exhaustive support table for r0 and u0",
                  {"r0(S)", "possible values of u0(S)", "type supports supp(S)"}, {}, {}, {}};
  const auto rows = support_value_table();
  std::map<int, std::set<std::uint32_t>> values;
  std::map<int, std::vector<std::string>> words;
  for (const SupportRow& row : rows) {
    values[row.rank].insert(row.value);
    words[row.rank].push_back(row.support.word());
  }
  std::string ladder;
  std::optional<std::uint32_t> previous_max;
  for (const auto& [rank, vs] : values) {
    std::vector<std::string> cells;
    for (auto v : vs) cells.push_back(std::to_string(v));
    t.rows.push_back({std::to_string(rank), join(cells), join(words[rank])});
    const auto lo = *vs.begin(), hi = *vs.rbegin();
    if (previous_max && *previous_max >= lo)
      t.diffs.push_back("ladder: row " + std::to_string(rank) + " minimum " + std::to_string(lo) +
                        " does not exceed the previous row maximum " + std::to_string(*previous_max));
    ladder += (ladder.empty() ? "" : "<") + std::to_string(lo) + (lo == hi ? "" : "≤" + std::to_string(hi));
    previous_max = hi;
  }
  diff_grid(kSupportTable, t, &t.diffs);
  if (ladder != kLadder) t.diffs.push_back("ladder: expected '" + kLadder + "', computed '" + ladder + "'");
  t.notes.push_back("ladder " + ladder);
  return t;
}

}  // namespace

std::vector<TableArtifact> build_tables() {
  std::vector<TableArtifact> out;
  out.push_back(pair_rank_table(0, "1", "Ranks r0 of sets with cardinality two"));
  out.push_back(exceptional_agent0());
  out.push_back(pair_rank_table(0, "3a", "Pair ranks r0"));
  out.push_back(pair_rank_table(1, "3b", "Pair ranks r1"));
  out.push_back(pair_rank_table(2, "3c", "Pair ranks r2"));
  out.push_back(support_table());
  out.push_back(exceptional_all());
  return out;
}

}  // namespace efx::cli
