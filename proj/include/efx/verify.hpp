#pragma once

// Exhaustive checkers for the non-existence theorems, the lemmas behind them,
// and the valuation-class properties. Every checker returns a VerdictReport
// whose witnesses can be re-evaluated independently.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "efx/cardinal.hpp"
#include "efx/core.hpp"
#include "efx/kernels.hpp"
#include "efx/ordinal.hpp"

namespace efx {

enum class ProfileKind { ordinal, subadditive, coverage };

const char* profile_kind_name(ProfileKind k);
std::optional<ProfileKind> parse_profile_kind(std::string_view name);

/// An ordinal profile or one of its cardinal realizations.
class Profile {
 public:
  static Profile ordinal(OrdinalProfile p);
  static Profile subadditive(SubadditiveProfile p);
  static Profile coverage(CoverageProfile p);
  /// The built-in instance of the given kind.
  static const Profile& builtin(ProfileKind kind);

  ProfileKind kind() const { return kind_; }
  const OrdinalProfile& ordinal_base() const;
  const SubadditiveProfile* subadditive_payload() const;
  const CoverageProfile* coverage_payload() const;

  /// Exact strict preference: value_i(s) > value_i(t).
  bool prefers(int agent, Bundle s, Bundle t) const;
  /// Exact value as text ("5", "lambda^2", "36").
  std::string render(int agent, Bundle s) const;

  /// Order-preserving integer encodings for the scan kernels.
  const kernels::AgentKeys& keys() const { return *keys_; }

 private:
  using Payload = std::variant<OrdinalProfile, SubadditiveProfile, CoverageProfile>;
  Profile(ProfileKind kind, std::shared_ptr<const Payload> payload);

  ProfileKind kind_;
  std::shared_ptr<const Payload> payload_;
  std::shared_ptr<const kernels::AgentKeys> keys_;
};

struct Witness {
  /// The allocation, or for bundle-level properties the bundles involved.
  std::vector<std::vector<int>> allocation;
  std::optional<int> agent_i;
  std::optional<int> agent_j;
  std::optional<int> good_g;
  std::string lhs;
  std::string rhs;
  bool operator==(const Witness&) const = default;
};

using Breakdown = std::map<std::string, std::map<std::string, std::uint64_t>>;

struct VerdictReport {
  std::string claim;
  std::string universe;
  std::uint64_t checked = 0;
  bool passed = false;
  std::string finding;
  std::vector<Witness> witnesses;
  Breakdown breakdown;
  std::optional<std::int64_t> elapsed_ms;

  std::string verdict() const { return passed ? "pass" : "fail"; }
  bool operator==(const VerdictReport&) const = default;
};

struct CheckOptions {
  int workers = 1;
  std::size_t witness_limit = 10;
  kernels::Backend backend = kernels::best_backend();
  bool timing = false;
};

/// Per-allocation feasibility bits and deficits in counter order.
struct AllocationScan {
  std::vector<std::uint8_t> feasible;
  std::vector<std::uint32_t> deficit;
  bool is_efx(int counter) const { return feasible[static_cast<std::size_t>(counter)] == 0b111; }
};

/// Runs the scan kernel over all allocations, splitting the counter range
/// into `workers` contiguous chunks. Output is independent of `workers`.
AllocationScan scan_all_allocations(const Profile& p, const CheckOptions& opt);

/// Lexicographically first strong-envy triple under the profile's exact values.
std::optional<EnvyTriple> cardinal_envy_witness(const Allocation& x, const Profile& p);
bool is_efx(const Allocation& x, const Profile& p);

/// v_i(X_i) >= α·v_i(X_j \ {g}) for all i, j, g, compared exactly.
bool is_alpha_efx(const Allocation& x, const SubadditiveProfile& v, const ApproxFactor& alpha);
std::optional<EnvyTriple> alpha_violation(const Allocation& x, const SubadditiveProfile& v,
                                          const ApproxFactor& alpha);

/// Re-evaluates an envy witness (agent_i, agent_j, good_g set) against the
/// profile: true iff the witness really is strong envy.
bool reverify_envy_witness(const Witness& w, const Profile& p);

// Theorems -----------------------------------------------------------------

VerdictReport verify_no_efx(const Profile& p, const CheckOptions& opt = {});
/// Requires a subadditive profile. Throws std::invalid_argument otherwise.
VerdictReport verify_no_alpha_efx(const Profile& p, const ApproxFactor& alpha,
                                  const CheckOptions& opt = {});

struct DeficitProfile {
  std::vector<std::uint32_t> deficits;  // by allocation counter
  int d_star = 0;
  std::vector<int> argmin;              // counters, ascending
  std::map<int, std::uint64_t> histogram;
  /// "2^(-d/6)"
  std::string alpha_star_exact() const;
  /// 10 digits, rounded toward zero.
  std::string alpha_star_decimal() const;
};

DeficitProfile compute_deficit_profile(const Profile& ordinal, const CheckOptions& opt = {});
VerdictReport deficit_report(const DeficitProfile& d, const Profile& ordinal,
                             const CheckOptions& opt = {});

// Valuation-class properties -----------------------------------------------

template <class V>
struct Evaluator {
  std::string name;
  std::function<V(int agent, Bundle s)> eval;
  int agents = kAgents;
};

std::string render_value(std::uint64_t v);
std::string render_value(LevelValue v);
std::uint32_t order_key(std::uint64_t v);  // throws if >= 2^31
std::uint32_t order_key(LevelValue v);

Evaluator<std::uint64_t> rank_evaluator(const OrdinalProfile& p);
Evaluator<LevelValue> subadditive_evaluator(const SubadditiveProfile& v);
Evaluator<std::uint64_t> coverage_evaluator(const CoverageProfile& u);

namespace detail {
template <class V>
kernels::KeyTable key_table(const Evaluator<V>& f, int agent, std::vector<V>* values) {
  kernels::KeyTable keys{};
  values->resize(kBundles);
  for (int m = 0; m < kBundles; ++m) {
    const V v = f.eval(agent, Bundle(static_cast<std::uint8_t>(m)));
    (*values)[static_cast<std::size_t>(m)] = v;
    keys[static_cast<std::size_t>(m)] = order_key(v);
  }
  return keys;
}
std::vector<std::vector<int>> bundles_of(std::initializer_list<Bundle> bundles);
void stamp(VerdictReport& r, const CheckOptions& opt, std::int64_t start_ns);
std::int64_t now_ns();
}  // namespace detail

/// f(S ∪ {g}) >= f(S) for every agent, bundle and good outside it.
template <class V>
VerdictReport check_monotone(const Evaluator<V>& f, const CheckOptions& opt = {}) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "monotone/" + f.name;
  r.universe = "bundle extensions (S, g not in S) per agent";
  std::uint64_t violations = 0;
  for (int i = 0; i < f.agents; ++i) {
    std::vector<V> values;
    const auto keys = detail::key_table(f, i, &values);
    const auto v = kernels::monotone_violations(opt.backend, keys);
    r.checked += kBundles * kGoods / 2;
    r.breakdown["agent " + std::to_string(i)]["violations"] = v.count;
    violations += v.count;
    if (v.first && r.witnesses.size() < opt.witness_limit) {
      const Bundle s(static_cast<std::uint8_t>(v.first->first));
      const GoodId g = static_cast<GoodId>(v.first->second);
      r.witnesses.push_back({detail::bundles_of({s, s.with(g)}), i, std::nullopt, g,
                             render_value(values[s.with(g).mask()]), render_value(values[s.mask()])});
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

/// r(S) > r(T) implies f(S) > f(T), over all ordered bundle pairs per agent.
template <class V>
VerdictReport check_strict_consistency(const Evaluator<std::uint64_t>& rank,
                                       const Evaluator<V>& f, const CheckOptions& opt = {}) {
  const auto start = detail::now_ns();
  VerdictReport r;
  r.claim = "strict-consistency/" + rank.name + "->" + f.name;
  r.universe = "ordered bundle pairs (S, T) per agent";
  std::uint64_t violations = 0;
  for (int i = 0; i < f.agents; ++i) {
    std::vector<std::uint64_t> rank_values;
    std::vector<V> values;
    const auto rk = detail::key_table(rank, i, &rank_values);
    const auto fk = detail::key_table(f, i, &values);
    const auto v = kernels::strict_consistency_violations(opt.backend, rk, fk);
    r.checked += static_cast<std::uint64_t>(kBundles) * kBundles;
    r.breakdown["agent " + std::to_string(i)]["violations"] = v.count;
    violations += v.count;
    if (v.first && r.witnesses.size() < opt.witness_limit) {
      const auto [s, t] = *v.first;
      r.witnesses.push_back({detail::bundles_of({Bundle(static_cast<std::uint8_t>(s)),
                                                 Bundle(static_cast<std::uint8_t>(t))}),
                             i, std::nullopt, std::nullopt,
                             render_value(values[static_cast<std::size_t>(s)]),
                             render_value(values[static_cast<std::size_t>(t)])});
    }
  }
  r.passed = violations == 0;
  r.finding = std::to_string(violations) + " violations";
  detail::stamp(r, opt, start);
  return r;
}

/// v(S) + v(T) >= v(S ∪ T) over all bundle pairs, summed exactly in Q(λ).
VerdictReport check_subadditive(const Evaluator<LevelValue>& v, const CheckOptions& opt = {});

/// u(S ∪ {g}) − u(S) >= u(T ∪ {g}) − u(T) for all g and S ⊆ T ⊆ M \ {g}.
VerdictReport check_submodular(const Evaluator<std::uint64_t>& u, const CheckOptions& opt = {});

/// Ranks (and coverage values when given) constant on each type-support class.
VerdictReport check_support_collapse(const OrdinalProfile& p, const CoverageProfile* u = nullptr,
                                     const CheckOptions& opt = {});

/// v(∅) = 0, and nonempty values within [lo, hi].
VerdictReport check_normalized_subadditive(const SubadditiveProfile& v, const CheckOptions& opt = {});
VerdictReport check_normalized_coverage(const CoverageProfile& u, const CheckOptions& opt = {});

/// u_i(S) = u_0(p^i S) and v_i(S) = λ^(7 - r_0(p^i S)) for all S, i.
VerdictReport check_relabeling(const Profile& p, const CheckOptions& opt = {});

// Lemmas ---------------------------------------------------------------------

/// EFX(X) <=> EFX(X^p) for all allocations.
VerdictReport verify_cyclic_symmetry(const Profile& p, const CheckOptions& opt = {});
/// |X0| = 2, |X1|, |X2| >= 2, agent 0 feasible  =>  supp(X0) in {Ax, Ay, BC, By, Cy}.
VerdictReport verify_lemma_first_pair(const Profile& ordinal, const CheckOptions& opt = {});
/// Three reports: |X0| <= 1, (2,2,4), (2,3,3); each also requires that these
/// classes cover every size pattern up to rotation.
std::vector<VerdictReport> verify_size_pattern_props(const Profile& ordinal,
                                                     const CheckOptions& opt = {});
/// Every ordinal strong-envy triple is also a cardinal one.
VerdictReport verify_transfer(const Profile& ordinal, const Profile& cardinal,
                              const CheckOptions& opt = {});

}  // namespace efx
