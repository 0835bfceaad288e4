#include <set>

#include "efx/verify.hpp"

namespace efx {

namespace {

Witness allocation_witness(const Allocation& x) {
  return Witness{x.as_lists(), std::nullopt, std::nullopt, std::nullopt, "", ""};
}

// Position k of the rotated allocation is played by agent k + 1 of the original.
std::uint8_t rotate_bits(std::uint8_t bits) {
  return static_cast<std::uint8_t>(((bits >> 1) | (bits << 2)) & 0b111);
}

}  // namespace

VerdictReport verify_cyclic_symmetry(const Profile& p, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const GoodPermutation& perm = p.ordinal_base().relabeling();
  const AllocationScan scan = scan_all_allocations(p, opt);

  VerdictReport r;
  r.claim = std::string("cyclic-symmetry/") + profile_kind_name(p.kind());
  r.universe = "complete allocations of 8 goods to 3 agents";
  r.checked = kAllocations;
  std::uint64_t mismatches = 0, efx_count = 0, feasibility_shifts = 0, cube_failures = 0;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    const Allocation y = rotate_allocation(x, perm);
    const int rc = counter_of(y);
    const bool here = scan.is_efx(c);
    const bool there = scan.is_efx(rc);
    // The same biconditional through the exact value comparisons.
    const bool exact_here = is_efx(x, p);
    const bool exact_there = is_efx(y, p);
    efx_count += here ? 1 : 0;
    if (rotate_bits(scan.feasible[static_cast<std::size_t>(c)]) != scan.feasible[static_cast<std::size_t>(rc)])
      ++feasibility_shifts;
    if (rotate_allocation(rotate_allocation(y, perm), perm) != x) ++cube_failures;
    if (here != there || exact_here != exact_there || here != exact_here) {
      ++mismatches;
      if (r.witnesses.size() < opt.witness_limit) {
        Witness w = allocation_witness(x);
        w.lhs = here ? "efx" : "not efx";
        w.rhs = there ? "rotation efx" : "rotation not efx";
        r.witnesses.push_back(std::move(w));
      }
    }
  }
  r.breakdown["efx"]["allocations"] = efx_count;
  r.breakdown["rotation"]["verdict_mismatches"] = mismatches;
  r.breakdown["rotation"]["feasibility_shift_mismatches"] = feasibility_shifts;
  r.breakdown["rotation"]["cube_not_identity"] = cube_failures;
  r.passed = mismatches == 0 && feasibility_shifts == 0 && cube_failures == 0;
  r.finding = std::to_string(efx_count) + " EFX allocations, " + std::to_string(mismatches) +
              " rotation mismatches";
  detail::stamp(r, opt, start);
  return r;
}

VerdictReport verify_lemma_first_pair(const Profile& ordinal, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const AllocationScan scan = scan_all_allocations(ordinal, opt);
  static const std::set<std::string> allowed = {"Ax", "Ay", "BC", "By", "Cy"};

  VerdictReport r;
  r.claim = "first-pair/" + std::string(profile_kind_name(ordinal.kind()));
  r.universe = "allocations with |X0| = 2, |X1| >= 2, |X2| >= 2 and agent 0 EFX-feasible";
  std::uint64_t violations = 0;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    if (x[0].size() != 2 || x[1].size() < 2 || x[2].size() < 2) continue;
    if (!(scan.feasible[static_cast<std::size_t>(c)] & 1u)) continue;
    ++r.checked;
    const std::string word = support_of(x[0]).word();
    ++r.breakdown[x.sizes().key()][word];
    if (allowed.count(word)) continue;
    ++violations;
    if (r.witnesses.size() < opt.witness_limit) {
      Witness w = allocation_witness(x);
      w.agent_i = 0;
      w.lhs = word;
      w.rhs = "Ax | Ay | BC | By | Cy";
      r.witnesses.push_back(std::move(w));
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(r.checked) + " feasible first pairs, " + std::to_string(violations) +
              " outside the allowed types";
  detail::stamp(r, opt, start);
  return r;
}

std::vector<VerdictReport> verify_size_pattern_props(const Profile& ordinal, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const AllocationScan scan = scan_all_allocations(ordinal, opt);

  // Every ordered pattern has a rotation inside one of the three classes.
  auto in_class = [](const SizePattern& s) {
    return s.sizes[0] <= 1 || s == SizePattern{{2, 2, 4}} || s == SizePattern{{2, 3, 3}};
  };
  std::uint64_t patterns = 0, uncovered = 0;
  for (int a = 0; a <= kGoods; ++a)
    for (int b = 0; a + b <= kGoods; ++b) {
      SizePattern s{{a, b, kGoods - a - b}};
      ++patterns;
      bool covered = false;
      for (int k = 0; k < kAgents && !covered; ++k) {
        covered = in_class(s);
        s = SizePattern{{s.sizes[1], s.sizes[2], s.sizes[0]}};
      }
      uncovered += covered ? 0 : 1;
    }

  struct Class {
    const char* claim;
    const char* universe;
    std::function<bool(const SizePattern&)> member;
    std::uint64_t expected;
  };
  const Class classes[] = {
      {"small-first", "allocations with |X0| <= 1", [](const SizePattern& s) { return s.sizes[0] <= 1; },
       (1u << kGoods) + kGoods * (1u << (kGoods - 1))},
      {"pattern-2,2,4", "allocations with sizes (2,2,4)",
       [](const SizePattern& s) { return s == SizePattern{{2, 2, 4}}; }, multinomial(SizePattern{{2, 2, 4}})},
      {"pattern-2,3,3", "allocations with sizes (2,3,3)",
       [](const SizePattern& s) { return s == SizePattern{{2, 3, 3}}; }, multinomial(SizePattern{{2, 3, 3}})},
  };

  std::vector<VerdictReport> out;
  for (const Class& cls : classes) {
    VerdictReport r;
    r.claim = cls.claim;
    r.universe = cls.universe;
    std::uint64_t efx_count = 0, feasible0 = 0;
    for (int c = 0; c < kAllocations; ++c) {
      const Allocation x = allocation_from_counter(c);
      if (!cls.member(x.sizes())) continue;
      ++r.checked;
      feasible0 += scan.feasible[static_cast<std::size_t>(c)] & 1u;
      if (!scan.is_efx(c)) continue;
      ++efx_count;
      if (r.witnesses.size() < opt.witness_limit) r.witnesses.push_back(allocation_witness(x));
    }
    r.breakdown["class"]["allocations"] = r.checked;
    r.breakdown["class"]["expected_allocations"] = cls.expected;
    r.breakdown["class"]["agent0_feasible"] = feasible0;
    r.breakdown["class"]["efx"] = efx_count;
    r.breakdown["rotation cover"]["ordered_patterns"] = patterns;
    r.breakdown["rotation cover"]["uncovered"] = uncovered;
    r.passed = efx_count == 0 && r.checked == cls.expected && uncovered == 0;
    r.finding = std::to_string(efx_count) + " EFX / " + std::to_string(r.checked) + " (expected class size " +
                std::to_string(cls.expected) + "), " + std::to_string(uncovered) + " of " +
                std::to_string(patterns) + " patterns uncovered by rotation";
    detail::stamp(r, opt, start);
    out.push_back(std::move(r));
  }
  return out;
}

VerdictReport verify_transfer(const Profile& ordinal, const Profile& cardinal, const CheckOptions& opt) {
  const auto start = detail::now_ns();
  const OrdinalProfile& ranks = ordinal.ordinal_base();

  VerdictReport r;
  r.claim = std::string("transfer/") + profile_kind_name(ordinal.kind()) + "->" + profile_kind_name(cardinal.kind());
  r.universe = "ordinal strong-envy triples (i, j, g) over all allocations";
  std::uint64_t exceptions = 0, cardinal_efx_not_ordinal = 0;
  for (int c = 0; c < kAllocations; ++c) {
    const Allocation x = allocation_from_counter(c);
    bool ordinal_envy = false;
    for (int i = 0; i < kAgents; ++i)
      for (int j = 0; j < kAgents; ++j)
        for (GoodId g : x[j]) {
          const Bundle rest = x[j].without(g);
          if (ranks(i, rest) <= ranks(i, x[i])) continue;
          ordinal_envy = true;
          ++r.checked;
          if (cardinal.prefers(i, rest, x[i])) continue;
          ++exceptions;
          if (r.witnesses.size() < opt.witness_limit)
            r.witnesses.push_back({x.as_lists(), i, j, static_cast<int>(g), cardinal.render(i, rest),
                                   cardinal.render(i, x[i])});
        }
    if (ordinal_envy && is_efx(x, cardinal)) ++cardinal_efx_not_ordinal;
  }
  r.breakdown["transfer"]["exceptions"] = exceptions;
  r.breakdown["transfer"]["cardinal_efx_outside_ordinal_efx"] = cardinal_efx_not_ordinal;
  r.passed = exceptions == 0 && cardinal_efx_not_ordinal == 0;
  r.finding = std::to_string(r.checked) + " ordinal envy triples, " + std::to_string(exceptions) +
              " not inherited";
  detail::stamp(r, opt, start);
  return r;
}

}  // namespace efx
