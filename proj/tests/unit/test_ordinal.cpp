#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "efx/ordinal.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace efx;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kDataDir = EFX_DATA_DIR;

Allocation alloc(Bundle a, Bundle b, Bundle c) { return Allocation(a, b, c); }

}  // namespace

TEST(BasePairRank, TableCells) {
  EXPECT_EQ(base_pair_rank(ItemType::A, ItemType::X), 4);
  EXPECT_EQ(base_pair_rank(ItemType::B, ItemType::C), 5);
  EXPECT_EQ(base_pair_rank(ItemType::C, ItemType::B), 5);
  EXPECT_EQ(base_pair_rank(ItemType::A, ItemType::A), 1);
  EXPECT_EQ(base_pair_rank(ItemType::A, ItemType::Y), 6);
  EXPECT_THROW(base_pair_rank(ItemType::X, ItemType::X), UndefinedPairError);
  EXPECT_THROW(base_pair_rank(ItemType::Y, ItemType::Y), UndefinedPairError);
}

TEST(IsExceptional, Examples) {
  EXPECT_TRUE(is_exceptional(Bundle{1, 2, 6}));
  EXPECT_TRUE(is_exceptional(Bundle{0, 1, 2}));
  EXPECT_FALSE(is_exceptional(Bundle{0, 1, 7}));
  EXPECT_FALSE(is_exceptional(Bundle{0, 1, 2, 6}));
  EXPECT_FALSE(is_exceptional(Bundle{0, 6, 1}));  // A and x both fill one slot
}

TEST(IsExceptional, ExactlyTwelveTriples) {
  int count = 0;
  for (int m = 0; m < kBundles; ++m) count += is_exceptional(Bundle(static_cast<std::uint8_t>(m)));
  EXPECT_EQ(count, 12);
}

TEST(Rank0, Examples) {
  EXPECT_EQ(rank0(Bundle{}), 0);
  EXPECT_EQ(rank0(Bundle{5}), 1);
  EXPECT_EQ(rank0(Bundle{6, 7}), 1);
  EXPECT_EQ(rank0(Bundle{0, 3, 1, 4}), 2);
  EXPECT_EQ(rank0(Bundle{1, 4, 2, 5, 6}), 7);
  EXPECT_EQ(rank0(Bundle::all()), 7);
}

TEST(Rank0, MatchesIndependentOracleEverywhere) {
  for (int i = 0; i < kAgents; ++i)
    for (int m = 0; m < kBundles; ++m)
      ASSERT_EQ(rank_for_agent(i, Bundle(static_cast<std::uint8_t>(m))), oracle::rank(i, oracle::from_mask(m)))
          << "agent " << i << " mask " << m;
}

TEST(Rank0, TopRankIffContainsExceptionalTriple) {
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    bool contains = false;
    for (int t = 0; t < kBundles; ++t) {
      const Bundle tr(static_cast<std::uint8_t>(t));
      contains = contains || (tr.is_subset_of(s) && is_exceptional(tr));
    }
    EXPECT_EQ(rank0(s) == 7, contains) << s.digits();
  }
}

TEST(RankForAgent, Examples) {
  EXPECT_EQ(rank_for_agent(1, Bundle{0, 1}), 5);
  EXPECT_EQ(rank_for_agent(2, Bundle{1, 6}), 4);
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    EXPECT_EQ(rank_for_agent(0, s), rank0(s));
  }
}

TEST(RankForAgent, ShiftIdentity) {
  const auto sigma = GoodPermutation::sigma();
  for (int i = 0; i < kAgents; ++i)
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      EXPECT_EQ(rank_for_agent((i + 1) % kAgents, s), rank_for_agent(i, sigma(s)));
    }
}

TEST(RankFunction, BasicShape) {
  const auto& p = OrdinalProfile::builtin();
  for (int i = 0; i < kAgents; ++i) {
    EXPECT_EQ(p(i, Bundle{}), 0);
    for (int g = 0; g < kGoods; ++g) EXPECT_EQ(p(i, Bundle::single(static_cast<GoodId>(g))), 1);
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      EXPECT_LE(p(i, s), 7);
      for (int g = 0; g < kGoods; ++g) EXPECT_GE(p(i, s.with(static_cast<GoodId>(g))), p(i, s));
    }
  }
}

TEST(RankFunction, SupportCollapse) {
  const auto& p = OrdinalProfile::builtin();
  std::map<std::uint8_t, int> by_support;
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    auto [it, inserted] = by_support.emplace(support_of(s).bits(), p(0, s));
    if (!inserted) EXPECT_EQ(it->second, p(0, s)) << s.digits();
  }
  EXPECT_EQ(by_support.size(), 32u);
}

TEST(EfxFeasible, Examples) {
  const auto& p = OrdinalProfile::builtin();
  EXPECT_TRUE(efx_feasible(0, alloc(Bundle::all(), {}, {}), p));
  EXPECT_FALSE(efx_feasible(0, alloc({}, Bundle{6, 7}, Bundle{0, 1, 2, 3, 4, 5}), p));
  // X0 of type xy with two bundles of three.
  for (const Allocation& x : enumerate_allocations())
    if (x[0] == Bundle{6, 7} && x[1].size() == 3) EXPECT_FALSE(efx_feasible(0, x, p)) << x.to_string();
}

TEST(StrongEnvyWitness, Examples) {
  const auto& p = OrdinalProfile::builtin();
  const auto w = strong_envy_witness(alloc(Bundle{1, 7}, Bundle{4, 6}, Bundle{0, 2, 3, 5}), p);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (EnvyTriple{1, 2, 0}));
  const auto m = strong_envy_witness(alloc(Bundle::all(), {}, {}), p);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->i, 1);
  EXPECT_EQ(m->j, 0);
}

TEST(StrongEnvyWitness, EmptyBundleAgentEnvies) {
  const auto& p = OrdinalProfile::builtin();
  for (const Allocation& x : enumerate_allocations()) {
    int empty = -1;
    bool big = false;
    for (int k = 0; k < kAgents; ++k) {
      if (x[k].is_empty() && empty < 0) empty = k;
      big = big || x[k].size() >= 2;
    }
    if (empty < 0 || !big) continue;
    // Some strong envy exists from the empty agent.
    bool envies = false;
    for (int j = 0; j < kAgents; ++j)
      for (GoodId g : x[j]) envies = envies || p(empty, x[j].without(g)) > 0;
    EXPECT_TRUE(envies);
    const auto w = strong_envy_witness(x, p);
    ASSERT_TRUE(w);
    EXPECT_LE(w->i, empty);
  }
}

TEST(RankDeficit, MatchesOracleAndIsPositive) {
  const auto& p = OrdinalProfile::builtin();
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    const int d = rank_deficit(x, p);
    EXPECT_GE(d, 1);
    EXPECT_EQ(d, oracle::deficit(oracle::allocation(c)));
    EXPECT_EQ(d == 0, is_efx(x, p));
  }
  EXPECT_EQ(rank_deficit(alloc(Bundle::all(), {}, {}), p), 7);
}

TEST(OrdinalEfx, MatchesOracleFeasibility) {
  const auto& p = OrdinalProfile::builtin();
  auto value = [](int i, const oracle::Set& s) { return oracle::rank(i, s); };
  for (int c = 0; c < kAllocations; ++c) {
    const auto ox = oracle::allocation(c);
    const Allocation x = allocation_from_counter(c);
    for (int i = 0; i < kAgents; ++i) ASSERT_EQ(efx_feasible(i, x, p), oracle::feasible(i, ox, value));
  }
}

TEST(Template, BuiltinSerializationRoundTrips) {
  const InstanceTemplate builtin = InstanceTemplate::builtin();
  const std::string text = serialize_template(builtin);
  EXPECT_EQ(parse_template(text), builtin);
  EXPECT_EQ(serialize_template(parse_template(text)), text);
}

TEST(Template, BundledFileReproducesBuiltIn) {
  const std::string text = read_file(kDataDir + "/builtin_instance.json");
  ASSERT_FALSE(text.empty());
  const LoadedTemplate loaded = load_template(text);
  EXPECT_EQ(loaded.instance, InstanceTemplate::builtin());
  for (int i = 0; i < kAgents; ++i)
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      ASSERT_EQ(loaded.profile(i, s), OrdinalProfile::builtin()(i, s));
    }
  EXPECT_EQ(load_template_file(kDataDir + "/builtin_instance.json"), InstanceTemplate::builtin());
}

TEST(Template, BcTwoMutantLoads) {
  const LoadedTemplate loaded = load_template(read_file(kDataDir + "/bc_two.json"));
  EXPECT_EQ(loaded.profile(0, Bundle{1, 2}), 2);
  int efx = 0;
  for (const Allocation& x : enumerate_allocations()) efx += is_efx(x, loaded.profile);
  EXPECT_EQ(efx, 156);
}

namespace {

std::string builtin_json_with(const std::function<void(nlohmann::json&)>& edit) {
  auto doc = nlohmann::json::parse(serialize_template(InstanceTemplate::builtin()));
  edit(doc);
  return doc.dump();
}

std::string error_location(const std::string& text) {
  try {
    parse_template(text);
  } catch (const TemplateError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST(Template, MissingCellIsReportedWithLocation) {
  const auto text = builtin_json_with([](auto& d) { d["pair_ranks"]["B"].erase("y"); });
  EXPECT_EQ(error_location(text), "/pair_ranks/B/y");
}

TEST(Template, ValidationErrors) {
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["pair_ranks"]["B"]["y"] = 4; })), "/pair_ranks/B/y");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["pair_ranks"]["A"]["A"] = 9; })), "/pair_ranks/A/A");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["permutation"][0] = 2; })), "/permutation");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["permutation"] = {1, 0, 2, 3, 4, 5, 6, 7}; })),
            "/permutation");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["permutation"] = {1, 2, 3, 0, 4, 5, 6, 7}; })),
            "/permutation");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["top_rank"] = 9; })), "/top_rank");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["types"][0]["goods"] = {0}; })), "/types");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d["exceptional"][0][0] = "Q"; })), "/exceptional/0/0");
  EXPECT_EQ(error_location(builtin_json_with([](auto& d) { d.erase("permutation"); })), "/permutation");
  EXPECT_EQ(error_location("{\n  \"types\": [\n"), "line 3, column 1");
}

TEST(Template, IdenticalAgentsHaveEfxAllocations) {
  const LoadedTemplate loaded = load_template(read_file(kDataDir + "/identical_agents.json"));
  int efx = 0, nonempty = 0;
  for (const Allocation& x : enumerate_allocations()) {
    efx += is_efx(x, loaded.profile);
    nonempty += !x[0].is_empty() && !x[1].is_empty() && !x[2].is_empty();
  }
  EXPECT_EQ(efx, nonempty);
  EXPECT_EQ(efx, 5796);
}
