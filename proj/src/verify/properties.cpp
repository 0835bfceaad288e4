#include <array>
#include <map>
#include <stdexcept>
#include <tuple>

#include "efx/verify.hpp"

namespace efx {

std::string render_value(std::uint64_t v) { return std::to_string(v); }
std::string render_value(LevelValue v) { return v.to_string(); }

std::uint32_t order_key(std::uint64_t v) {
  if (v >= (1ull << 31)) throw std::out_of_range("value too large for the scan kernels");
  return static_cast<std::uint32_t>(v);
}

std::uint32_t order_key(LevelValue v) { return v.order_key(); }

Evaluator<std::uint64_t> rank_evaluator(const OrdinalProfile& p) {
  return {"rank", [p](int i, Bundle s) -> std::uint64_t { return p(i, s); }};
}

Evaluator<LevelValue> subadditive_evaluator(const SubadditiveProfile& v) {
  return {"subadditive", [v](int i, Bundle s) { return v(i, s); }};
}

Evaluator<std::uint64_t> coverage_evaluator(const CoverageProfile& u) {
  return {"coverage", [u](int i, Bundle s) -> std::uint64_t { return u(i, s); }};
}

VerdictReport check_subadditive(const Evaluator<LevelValue>& v, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "subadditive/" + v.name;
  r.universe = "ordered bundle pairs (S, T) per agent";
  // The verdict depends only on the three levels; each distinct triple is
  // decided once by the exact Q(λ) comparison.
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, bool> decided;
  std::uint64_t violations = 0;
  for (int i = 0; i < v.agents; ++i) {
    std::array<LevelValue, kBundles> values{};
    for (int m = 0; m < kBundles; ++m) values[static_cast<std::size_t>(m)] = v.eval(i, Bundle(static_cast<std::uint8_t>(m)));
    std::uint64_t agent_violations = 0;
    for (int s = 0; s < kBundles; ++s) {
      for (int t = 0; t < kBundles; ++t) {
        const LevelValue a = values[static_cast<std::size_t>(s)];
        const LevelValue b = values[static_cast<std::size_t>(t)];
        const LevelValue u = values[static_cast<std::size_t>(s | t)];
        const auto key = std::make_tuple(a.order_key(), b.order_key(), u.order_key());
        auto it = decided.find(key);
        if (it == decided.end()) {
          const std::array<LevelValue, 2> parts = {a, b};
          it = decided.emplace(key, level_sum_compare(parts, u) >= 0).first;
        }
        ++r.checked;
        if (it->second) continue;
        ++agent_violations;
        if (r.witnesses.size() < opt.witness_limit) {
          const Bundle bs(static_cast<std::uint8_t>(s)), bt(static_cast<std::uint8_t>(t));
          r.witnesses.push_back({detail::bundles_of({bs, bt, bs | bt}), i, std::nullopt, std::nullopt,
                                 a.to_string() + " + " + b.to_string(), u.to_string()});
        }
      }
    }
    r.breakdown["agent " + std::to_string(i)]["violations"] = agent_violations;
    violations += agent_violations;
  }
  r.breakdown["exact comparisons"]["distinct level triples"] = decided.size();
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport check_submodular(const Evaluator<std::uint64_t>& u, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "submodular/" + u.name;
  r.universe = "nested pairs S ⊆ T ⊆ M \\ {g} per good and agent";
  std::uint64_t violations = 0;
  for (int i = 0; i < u.agents; ++i) {
    std::array<std::int64_t, kBundles> values{};
    for (int m = 0; m < kBundles; ++m)
      values[static_cast<std::size_t>(m)] = static_cast<std::int64_t>(u.eval(i, Bundle(static_cast<std::uint8_t>(m))));
    std::uint64_t agent_violations = 0;
    for (int g = 0; g < kGoods; ++g) {
      const int bit = 1 << g;
      const int rest = 0xFF & ~bit;
      // T ranges over subsets of M \ {g}, S over subsets of T.
      for (int t = rest;; t = (t - 1) & rest) {
        const std::int64_t gain_t = values[static_cast<std::size_t>(t | bit)] - values[static_cast<std::size_t>(t)];
        for (int s = t;; s = (s - 1) & t) {
          const std::int64_t gain_s = values[static_cast<std::size_t>(s | bit)] - values[static_cast<std::size_t>(s)];
          ++r.checked;
          if (gain_s < gain_t) {
            ++agent_violations;
            if (r.witnesses.size() < opt.witness_limit) {
              r.witnesses.push_back({detail::bundles_of({Bundle(static_cast<std::uint8_t>(s)),
                                                         Bundle(static_cast<std::uint8_t>(t))}),
                                     i, std::nullopt, g, std::to_string(gain_s), std::to_string(gain_t)});
            }
          }
          if (s == 0) break;
        }
        if (t == 0) break;
      }
    }
    r.breakdown["agent " + std::to_string(i)]["violations"] = agent_violations;
    violations += agent_violations;
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport check_support_collapse(const OrdinalProfile& p, const CoverageProfile* u,
                                     const CheckOptions& opt) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = u ? "support-collapse/rank+coverage" : "support-collapse/rank";
  r.universe = "bundles grouped by type support, per agent";
  std::uint64_t violations = 0;
  std::uint64_t classes = 0;
  for (int i = 0; i < kAgents; ++i) {
    std::map<std::uint32_t, std::pair<Bundle, std::uint64_t>> first_rank;
    std::map<std::uint32_t, std::pair<Bundle, std::uint64_t>> first_value;
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      const std::uint32_t key = p.support_key(s);
      ++r.checked;
      auto check = [&](auto& seen, std::uint64_t value, const char* what) {
        auto [it, inserted] = seen.emplace(key, std::make_pair(s, value));
        if (inserted || it->second.second == value) return;
        ++violations;
        if (r.witnesses.size() < opt.witness_limit)
          r.witnesses.push_back({detail::bundles_of({it->second.first, s}), i, std::nullopt, std::nullopt,
                                 std::string(what) + " " + std::to_string(it->second.second),
                                 std::string(what) + " " + std::to_string(value)});
      };
      check(first_rank, p(i, s), "rank");
      if (u) check(first_value, (*u)(i, s), "value");
    }
    r.breakdown["agent " + std::to_string(i)]["classes"] = first_rank.size();
    classes += first_rank.size();
  }
  r.passed = violations == 0;
  r.finding = std::to_string(classes / kAgents) + " support classes per agent, " +
              std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport check_normalized_subadditive(const SubadditiveProfile& v, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "normalized/subadditive";
  r.universe = "bundles per agent; v(∅) = 0 and 1/2 <= v(S) <= 1 otherwise";
  const LevelValue half = LevelValue::lambda_power(6);
  const LevelValue one = LevelValue::lambda_power(0);
  std::uint64_t violations = 0;
  for (int i = 0; i < kAgents; ++i) {
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      const LevelValue x = v(i, s);
      const bool ok = s.is_empty() ? x.is_zero() : (x >= half && x <= one);
      ++r.checked;
      if (ok) continue;
      ++violations;
      if (r.witnesses.size() < opt.witness_limit)
        r.witnesses.push_back({detail::bundles_of({s}), i, std::nullopt, std::nullopt, x.to_string(),
                               s.is_empty() ? "0" : "[1/2, 1]"});
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport check_normalized_coverage(const CoverageProfile& u, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "normalized/coverage";
  r.universe = "bundles per agent; u(∅) = 0, u(M) = total weight, 21 <= u(S) <= 49 otherwise";
  std::uint64_t violations = 0;
  for (int i = 0; i < kAgents; ++i) {
    const std::uint32_t total = u.valuation(i).total_weight();
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      const std::uint32_t x = u(i, s);
      bool ok = s.is_empty() ? x == 0 : (x >= 21 && x <= 49);
      if (s == Bundle::all()) ok = ok && x == total;
      ++r.checked;
      if (ok) continue;
      ++violations;
      if (r.witnesses.size() < opt.witness_limit)
        r.witnesses.push_back({detail::bundles_of({s}), i, std::nullopt, std::nullopt,
                               std::to_string(x), s.is_empty() ? "0" : "[21, 49]"});
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport check_relabeling(const Profile& p, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const OrdinalProfile& ranks = p.ordinal_base();
  VerdictReport r;
  r.claim = std::string("relabeling/") + profile_kind_name(p.kind());
  r.universe = "bundles per agent; value_i(S) = value_0(p^i S)";
  std::uint64_t violations = 0;
  for (int i = 0; i < kAgents; ++i) {
    const GoodPermutation shift = ranks.relabeling().power(i);
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      const Bundle moved = shift(s);
      bool ok = ranks(i, s) == ranks(0, moved);
      std::string lhs = std::to_string(ranks(i, s)), rhs = std::to_string(ranks(0, moved));
      if (const auto* v = p.subadditive_payload()) {
        const LevelValue expect = moved.is_empty()
                                      ? LevelValue::zero()
                                      : LevelValue::lambda_power(kBuiltinTopRank - ranks(0, moved));
        ok = ok && (*v)(i, s) == expect;
        lhs = (*v)(i, s).to_string();
        rhs = expect.to_string();
      }
      if (const auto* u = p.coverage_payload()) {
        ok = ok && (*u)(i, s) == (*u)(0, moved) && u->valuation(i).evaluate(s) == (*u)(0, moved);
        lhs = std::to_string((*u)(i, s));
        rhs = std::to_string((*u)(0, moved));
      }
      ++r.checked;
      if (ok) continue;
      ++violations;
      if (r.witnesses.size() < opt.witness_limit)
        r.witnesses.push_back({detail::bundles_of({s, moved}), i, std::nullopt, std::nullopt, lhs, rhs});
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

}  // namespace efx
