#include "efx/ordinal.hpp"

#include <algorithm>
#include <set>

namespace efx {

namespace {

std::string cell_path(const InstanceTemplate& t, int a, int b) {
  return "/pair_ranks/" + t.types[static_cast<std::size_t>(a)].name + "/" +
         t.types[static_cast<std::size_t>(b)].name;
}

}  // namespace

InstanceTemplate InstanceTemplate::builtin() {
  InstanceTemplate t;
  t.types = {
      {"A", {0, 3}, false}, {"B", {1, 4}, false}, {"C", {2, 5}, false},
      {"x", {6}, true},     {"y", {7}, true},
  };
  //            A  B  C  x  y
  const int table[5][5] = {{1, 2, 2, 4, 6},
                           {2, 1, 5, 1, 3},
                           {2, 5, 1, 1, 3},
                           {4, 1, 1, 0, 1},
                           {6, 3, 3, 1, 0}};
  t.pair_ranks.assign(5, std::vector<std::optional<int>>(5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (table[a][b] != 0) t.pair_ranks[a][b] = table[a][b];
  t.exceptional = {{0, 1, 2}, {1, 2, 3}};  // ABC, BCx
  t.top_rank = kBuiltinTopRank;
  t.permutation = GoodPermutation::sigma();
  t.validate();
  return t;
}

int InstanceTemplate::find_type(std::string_view name) const {
  for (std::size_t k = 0; k < types.size(); ++k)
    if (types[k].name == name) return static_cast<int>(k);
  return -1;
}

int InstanceTemplate::pair_rank(int type_a, int type_b) const {
  const auto& cell = pair_ranks.at(static_cast<std::size_t>(type_a)).at(static_cast<std::size_t>(type_b));
  if (!cell)
    throw UndefinedPairError("no pair of types (" + types[static_cast<std::size_t>(type_a)].name +
                             "," + types[static_cast<std::size_t>(type_b)].name + ") exists");
  return *cell;
}

bool InstanceTemplate::is_exceptional_triple(Bundle s) const {
  if (s.size() != 3) return false;
  std::array<int, 3> key{};
  int k = 0;
  for (GoodId g : s) key[static_cast<std::size_t>(k++)] = good_type_[g];
  std::sort(key.begin(), key.end());
  return std::find(exceptional.begin(), exceptional.end(), key) != exceptional.end();
}

void InstanceTemplate::validate() {
  if (types.empty()) throw TemplateError("/types", "at least one type is required");
  std::set<std::string> names;
  good_type_.fill(-1);
  for (std::size_t k = 0; k < types.size(); ++k) {
    const auto& decl = types[k];
    const std::string where = "/types/" + std::to_string(k);
    if (decl.name.empty()) throw TemplateError(where + "/name", "type name must be non-empty");
    if (!names.insert(decl.name).second)
      throw TemplateError(where + "/name", "duplicate type name '" + decl.name + "'");
    if (decl.goods.empty()) throw TemplateError(where + "/goods", "type has no goods");
    if (decl.special && decl.goods.size() != 1)
      throw TemplateError(where, "a special good must be a single good");
    for (GoodId g : decl.goods) {
      if (g >= kGoods) throw TemplateError(where + "/goods", "good index out of range 0..7");
      if (good_type_[g] != -1)
        throw TemplateError(where + "/goods", "good " + std::to_string(g) + " assigned twice");
      good_type_[g] = static_cast<int>(k);
    }
  }
  for (int g = 0; g < kGoods; ++g)
    if (good_type_[g] == -1)
      throw TemplateError("/types", "good " + std::to_string(g) + " has no type");

  if (top_rank < 1 || top_rank > kMaxTopRank)
    throw TemplateError("/top_rank", "top rank must lie in 1.." + std::to_string(kMaxTopRank));

  const int n = type_count();
  if (static_cast<int>(pair_ranks.size()) != n)
    throw TemplateError("/pair_ranks", "pair table must have one row per type");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(pair_ranks[a].size()) != n)
      throw TemplateError("/pair_ranks/" + types[a].name, "row must have one cell per type");
    for (int b = 0; b < n; ++b) {
      const auto& cell = pair_ranks[a][b];
      const bool realizable = a != b || types[a].goods.size() >= 2;
      if (!realizable) {
        if (cell) throw TemplateError(cell_path(*this, a, b), "pair of a special good with itself");
        continue;
      }
      if (!cell) throw TemplateError(cell_path(*this, a, b), "missing pair rank");
      if (*cell < 1 || *cell > top_rank)
        throw TemplateError(cell_path(*this, a, b),
                            "rank " + std::to_string(*cell) + " outside 1.." + std::to_string(top_rank));
      if (pair_ranks[b][a] != cell)
        throw TemplateError(cell_path(*this, a, b), "pair table is not symmetric");
    }
  }

  for (std::size_t k = 0; k < exceptional.size(); ++k) {
    auto& triple = exceptional[k];
    const std::string where = "/exceptional/" + std::to_string(k);
    for (int idx : triple)
      if (idx < 0 || idx >= n) throw TemplateError(where, "unknown type");
    std::sort(triple.begin(), triple.end());
    for (int idx : triple) {
      const auto uses = std::count(triple.begin(), triple.end(), idx);
      if (static_cast<std::size_t>(uses) > types[static_cast<std::size_t>(idx)].goods.size())
        throw TemplateError(where, "triple needs more goods of type '" +
                                       types[static_cast<std::size_t>(idx)].name + "' than exist");
    }
  }

  if (!permutation.power(kAgents).is_identity())
    throw TemplateError("/permutation", "permutation order must divide the agent count 3");
}

bool InstanceTemplate::operator==(const InstanceTemplate& o) const {
  return types == o.types && pair_ranks == o.pair_ranks && exceptional == o.exceptional &&
         top_rank == o.top_rank && permutation == o.permutation;
}

OrdinalProfile::OrdinalProfile(InstanceTemplate instance) : instance_(std::move(instance)) {
  instance_.validate();
  std::array<Rank, kBundles> base{};
  // Subsets are numerically smaller than their supersets, so one ascending
  // pass can read every sub-bundle's rank from the table.
  for (int m = 1; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    const int size = s.size();
    int rank = 0;
    if (size == 1) {
      rank = 1;
    } else if (size == 2) {
      const GoodId g = *s.begin();
      const GoodId h = *std::next(s.begin());
      rank = instance_.pair_rank(instance_.type_index_of(g), instance_.type_index_of(h));
    } else if (size == 3) {
      if (instance_.is_exceptional_triple(s)) {
        rank = instance_.top_rank;
      } else {
        for (GoodId g : s) rank = std::max<int>(rank, base[s.without(g).mask()]);
      }
    } else {
      int triple_max = 0;
      bool has_exceptional = false;
      int pair_max = 0;
      for (int sub = m; sub > 0; sub = (sub - 1) & m) {
        const Bundle t(static_cast<std::uint8_t>(sub));
        if (t.size() == 3) {
          triple_max = std::max<int>(triple_max, base[sub]);
          has_exceptional = has_exceptional || instance_.is_exceptional_triple(t);
        } else if (t.size() == 2) {
          pair_max = std::max<int>(pair_max, base[sub]);
        }
      }
      const int reduced = has_exceptional ? instance_.top_rank : pair_max;
      if (reduced != triple_max)
        throw std::logic_error("triple-max and pair reduction disagree on bundle " + s.digits());
      rank = triple_max;
    }
    base[m] = static_cast<Rank>(rank);
  }
  for (int i = 0; i < kAgents; ++i) {
    const GoodPermutation p = instance_.permutation.power(i);
    std::array<Rank, kBundles> table{};
    for (int m = 0; m < kBundles; ++m) table[m] = base[p(Bundle(static_cast<std::uint8_t>(m))).mask()];
    ranks_[static_cast<std::size_t>(i)] = RankFunction(i, table);
  }
}

const OrdinalProfile& OrdinalProfile::builtin() {
  static const OrdinalProfile profile(InstanceTemplate::builtin());
  return profile;
}

std::uint32_t OrdinalProfile::support_key(Bundle s) const {
  std::uint32_t key = 0;
  for (GoodId g : s) key |= 1u << instance_.type_index_of(g);
  return key;
}

int base_pair_rank(ItemType a, ItemType b) {
  return InstanceTemplate::builtin().pair_rank(static_cast<int>(a), static_cast<int>(b));
}

bool is_exceptional(Bundle s) {
  if (s.size() != 3) return false;
  int a_or_x = 0, b = 0, c = 0;
  for (GoodId g : s) {
    switch (type_of(g)) {
      case ItemType::A:
      case ItemType::X: ++a_or_x; break;
      case ItemType::B: ++b; break;
      case ItemType::C: ++c; break;
      case ItemType::Y: break;
    }
  }
  return a_or_x == 1 && b == 1 && c == 1;
}

Rank rank0(Bundle s) { return OrdinalProfile::builtin()(0, s); }

Rank rank_for_agent(int agent, Bundle s) { return OrdinalProfile::builtin()(agent, s); }

bool efx_feasible(int agent, const Allocation& x, const OrdinalProfile& p) {
  const Rank own = p(agent, x[agent]);
  for (int j = 0; j < kAgents; ++j)
    for (GoodId g : x[j])
      if (p(agent, x[j].without(g)) > own) return false;
  return true;
}

bool is_efx(const Allocation& x, const OrdinalProfile& p) {
  for (int i = 0; i < kAgents; ++i)
    if (!efx_feasible(i, x, p)) return false;
  return true;
}

std::optional<EnvyTriple> strong_envy_witness(const Allocation& x, const OrdinalProfile& p) {
  for (int i = 0; i < kAgents; ++i) {
    const Rank own = p(i, x[i]);
    for (int j = 0; j < kAgents; ++j)
      for (GoodId g : x[j])
        if (p(i, x[j].without(g)) > own) return EnvyTriple{i, j, g};
  }
  return std::nullopt;
}

int rank_deficit(const Allocation& x, const OrdinalProfile& p) {
  int deficit = 0;
  for (int i = 0; i < kAgents; ++i) {
    const int own = p(i, x[i]);
    for (int j = 0; j < kAgents; ++j)
      for (GoodId g : x[j]) deficit = std::max(deficit, p(i, x[j].without(g)) - own);
  }
  return deficit;
}

}  // namespace efx
