#include <algorithm>
#include <array>
#include <stdexcept>

#include "efx/verify.hpp"

namespace efx {

namespace {

Witness allocation_witness(const Allocation& x) {
  return Witness{x.as_lists(), std::nullopt, std::nullopt, std::nullopt, "", ""};
}

Witness envy_witness(const Allocation& x, const EnvyTriple& t, std::string lhs, std::string rhs) {
  return Witness{x.as_lists(), t.i, t.j, static_cast<int>(t.g), std::move(lhs), std::move(rhs)};
}

}  // namespace

VerdictReport verify_no_efx(const Profile& p, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const AllocationScan scan = scan_all_allocations(p, opt);
  VerdictReport r;
  r.claim = std::string("no-efx/") + profile_kind_name(p.kind());
  r.universe = "complete allocations of 8 goods to 3 agents";
  r.checked = kAllocations;
  std::uint64_t efx_count = 0;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    auto& row = r.breakdown[x.sizes().key()];
    ++row["allocations"];
    row["agent0_feasible"] += scan.feasible[static_cast<std::size_t>(c)] & 1u;
    if (scan.is_efx(c)) {
      ++row["efx"];
      ++efx_count;
      if (r.witnesses.size() < opt.witness_limit) r.witnesses.push_back(allocation_witness(x));
    } else {
      row["efx"] += 0;
    }
  }
  r.passed = efx_count == 0;
  r.finding = std::to_string(efx_count) + " EFX / " + std::to_string(kAllocations);
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport verify_no_alpha_efx(const Profile& p, const ApproxFactor& alpha, const CheckOptions& opt) {
  const SubadditiveProfile* v = p.subadditive_payload();
  if (!v) throw std::invalid_argument("alpha-EFX is defined for the subadditive profile only");
  const auto start = detail::now_ns();

  // compare_scaled only sees the two levels, so memoize on their keys.
  constexpr int kKeys = LevelValue::kMaxKeyedExponent + 2;
  std::array<std::array<std::int8_t, kKeys>, kKeys> memo{};
  for (auto& row : memo) row.fill(-1);
  auto holds = [&](LevelValue a, LevelValue b) {
    auto& cell = memo[a.order_key()][b.order_key()];
    if (cell < 0) cell = compare_scaled(a, alpha, b) ? 1 : 0;
    return cell == 1;
  };

  VerdictReport r;
  r.claim = "no-alpha-efx/subadditive@" + alpha.to_string();
  r.universe = "complete allocations of 8 goods to 3 agents";
  r.checked = kAllocations;
  std::uint64_t found = 0;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    bool ok = true;
    for (int i = 0; i < kAgents && ok; ++i)
      for (int j = 0; j < kAgents && ok; ++j)
        for (GoodId g : x[j])
          if (!holds((*v)(i, x[i]), (*v)(i, x[j].without(g)))) {
            ok = false;
            break;
          }
    auto& row = r.breakdown[x.sizes().key()];
    ++row["allocations"];
    row["alpha_efx"] += ok ? 1 : 0;
    if (ok) {
      ++found;
      if (r.witnesses.size() < opt.witness_limit) r.witnesses.push_back(allocation_witness(x));
    }
  }
  r.breakdown["alpha"]["exceeds_lambda"] = alpha.exceeds_lambda() ? 1 : 0;
  r.passed = found == 0;
  r.finding = std::string(found ? "alpha-EFX EXISTS: " : "no alpha-EFX: ") + std::to_string(found) +
              " alpha-EFX / " + std::to_string(kAllocations) + " at alpha = " + alpha.to_string();
  detail::stamp(r, opt, start);
  return r;
}

std::string DeficitProfile::alpha_star_exact() const {
  if (d_star == 0) return "1";
  return "2^(-" + std::to_string(d_star) + "/6)";
}

std::string DeficitProfile::alpha_star_decimal() const {
  return lambda_power_decimal(Rational(d_star), 10);
}

DeficitProfile compute_deficit_profile(const Profile& ordinal, const CheckOptions& opt) {
  if (ordinal.kind() != ProfileKind::ordinal)
    throw std::invalid_argument("rank deficits are defined on the ordinal profile");
  AllocationScan scan = scan_all_allocations(ordinal, opt);
  DeficitProfile d;
  d.deficits = std::move(scan.deficit);
  d.d_star = static_cast<int>(*std::min_element(d.deficits.begin(), d.deficits.end()));
  for (int c = 0; c < kAllocations; ++c) {
    const auto value = d.deficits[static_cast<std::size_t>(c)];
    ++d.histogram[static_cast<int>(value)];
    if (static_cast<int>(value) == d.d_star) d.argmin.push_back(c);
  }
  return d;
}

VerdictReport deficit_report(const DeficitProfile& d, const Profile& ordinal, const CheckOptions& opt) {
  const auto& ranks = ordinal.ordinal_base();
  VerdictReport r;
  r.claim = "alpha-star/ordinal";
  r.universe = "complete allocations of 8 goods to 3 agents";
  r.checked = d.deficits.size();
  r.passed = d.d_star >= 1;
  r.finding = "d* = " + std::to_string(d.d_star) + ", alpha* = " + d.alpha_star_exact() + " ~ " +
              d.alpha_star_decimal() + " (rounded down), " + std::to_string(d.argmin.size()) +
              " argmin allocations";
  for (const auto& [value, count] : d.histogram) r.breakdown["deficit"][std::to_string(value)] = count;
  for (int c : d.argmin) {
    if (r.witnesses.size() >= opt.witness_limit) break;
    const Allocation x = allocation_from_counter(c);
    // The lexicographically first triple attaining the deficit.
    std::optional<EnvyTriple> worst;
    for (int i = 0; i < kAgents && !worst; ++i)
      for (int j = 0; j < kAgents && !worst; ++j)
        for (GoodId g : x[j])
          if (ranks(i, x[j].without(g)) - ranks(i, x[i]) == d.d_star && d.d_star > 0) {
            worst = EnvyTriple{i, j, g};
            break;
          }
    if (worst) {
      r.witnesses.push_back(envy_witness(x, *worst, std::to_string(ranks(worst->i, x[worst->i])),
                                         std::to_string(ranks(worst->i, x[worst->j].without(worst->g)))));
    } else {
      r.witnesses.push_back(allocation_witness(x));
    }
  }
  return r;
}

}  // namespace efx
