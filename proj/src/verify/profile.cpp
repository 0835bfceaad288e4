#include <chrono>
#include <thread>

#include "efx/verify.hpp"

namespace efx {

const char* profile_kind_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::ordinal: return "ordinal";
    case ProfileKind::subadditive: return "subadditive";
    case ProfileKind::coverage: return "coverage";
  }
  return "?";
}

std::optional<ProfileKind> parse_profile_kind(std::string_view name) {
  if (name == "ordinal") return ProfileKind::ordinal;
  if (name == "subadditive") return ProfileKind::subadditive;
  if (name == "coverage") return ProfileKind::coverage;
  return std::nullopt;
}

Profile::Profile(ProfileKind kind, std::shared_ptr<const Payload> payload)
    : kind_(kind), payload_(std::move(payload)) {
  auto keys = std::make_shared<kernels::AgentKeys>();
  for (int i = 0; i < kAgents; ++i) {
    auto& table = keys->tables[static_cast<std::size_t>(i)];
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      std::uint32_t key = 0;
      switch (kind_) {
        case ProfileKind::ordinal: key = std::get<OrdinalProfile>(*payload_)(i, s); break;
        case ProfileKind::subadditive: key = std::get<SubadditiveProfile>(*payload_)(i, s).order_key(); break;
        case ProfileKind::coverage: key = std::get<CoverageProfile>(*payload_)(i, s); break;
      }
      table[static_cast<std::size_t>(m)] = key;
    }
  }
  keys_ = std::move(keys);
}

Profile Profile::ordinal(OrdinalProfile p) {
  return Profile(ProfileKind::ordinal, std::make_shared<const Payload>(std::move(p)));
}
Profile Profile::subadditive(SubadditiveProfile p) {
  return Profile(ProfileKind::subadditive, std::make_shared<const Payload>(std::move(p)));
}
Profile Profile::coverage(CoverageProfile p) {
  return Profile(ProfileKind::coverage, std::make_shared<const Payload>(std::move(p)));
}

const Profile& Profile::builtin(ProfileKind kind) {
  static const Profile ord = ordinal(OrdinalProfile::builtin());
  static const Profile sub = subadditive(SubadditiveProfile::builtin());
  static const Profile cov = coverage(CoverageProfile::builtin());
  switch (kind) {
    case ProfileKind::ordinal: return ord;
    case ProfileKind::subadditive: return sub;
    case ProfileKind::coverage: return cov;
  }
  return ord;
}

const OrdinalProfile& Profile::ordinal_base() const {
  switch (kind_) {
    case ProfileKind::ordinal: return std::get<OrdinalProfile>(*payload_);
    case ProfileKind::subadditive: return std::get<SubadditiveProfile>(*payload_).ordinal();
    case ProfileKind::coverage: return std::get<CoverageProfile>(*payload_).ordinal();
  }
  return std::get<OrdinalProfile>(*payload_);
}

const SubadditiveProfile* Profile::subadditive_payload() const {
  return std::get_if<SubadditiveProfile>(payload_.get());
}

const CoverageProfile* Profile::coverage_payload() const {
  return std::get_if<CoverageProfile>(payload_.get());
}

bool Profile::prefers(int agent, Bundle s, Bundle t) const {
  switch (kind_) {
    case ProfileKind::ordinal: {
      const auto& r = std::get<OrdinalProfile>(*payload_);
      return r(agent, s) > r(agent, t);
    }
    case ProfileKind::subadditive: {
      const auto& v = std::get<SubadditiveProfile>(*payload_);
      return v(agent, s) > v(agent, t);
    }
    case ProfileKind::coverage: {
      const auto& u = std::get<CoverageProfile>(*payload_);
      return u(agent, s) > u(agent, t);
    }
  }
  return false;
}

std::string Profile::render(int agent, Bundle s) const {
  switch (kind_) {
    case ProfileKind::ordinal: return std::to_string(std::get<OrdinalProfile>(*payload_)(agent, s));
    case ProfileKind::subadditive: return std::get<SubadditiveProfile>(*payload_)(agent, s).to_string();
    case ProfileKind::coverage: return std::to_string(std::get<CoverageProfile>(*payload_)(agent, s));
  }
  return {};
}

AllocationScan scan_all_allocations(const Profile& p, const CheckOptions& opt) {
  const auto& packed = packed_allocations();
  AllocationScan out;
  out.feasible.resize(packed.size());
  out.deficit.resize(packed.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, opt.workers));
  const std::size_t chunk = (packed.size() + workers - 1) / workers;
  auto run = [&](std::size_t begin) {
    const std::size_t end = std::min(packed.size(), begin + chunk);
    if (begin >= end) return;
    const std::span<const std::uint32_t> in(packed.data() + begin, end - begin);
    kernels::scan_allocations(opt.backend, p.keys(), in,
                              std::span(out.feasible.data() + begin, end - begin),
                              std::span(out.deficit.data() + begin, end - begin));
  };
  if (workers == 1) {
    run(0);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w * chunk);
  }
  return out;
}

std::optional<EnvyTriple> cardinal_envy_witness(const Allocation& x, const Profile& p) {
  for (int i = 0; i < kAgents; ++i)
    for (int j = 0; j < kAgents; ++j)
      for (GoodId g : x[j])
        if (p.prefers(i, x[j].without(g), x[i])) return EnvyTriple{i, j, g};
  return std::nullopt;
}

bool is_efx(const Allocation& x, const Profile& p) { return !cardinal_envy_witness(x, p); }

std::optional<EnvyTriple> alpha_violation(const Allocation& x, const SubadditiveProfile& v,
                                          const ApproxFactor& alpha) {
  for (int i = 0; i < kAgents; ++i)
    for (int j = 0; j < kAgents; ++j)
      for (GoodId g : x[j])
        if (!compare_scaled(v(i, x[i]), alpha, v(i, x[j].without(g)))) return EnvyTriple{i, j, g};
  return std::nullopt;
}

bool is_alpha_efx(const Allocation& x, const SubadditiveProfile& v, const ApproxFactor& alpha) {
  return !alpha_violation(x, v, alpha);
}

bool reverify_envy_witness(const Witness& w, const Profile& p) {
  if (!w.agent_i || !w.agent_j || !w.good_g || w.allocation.size() != kAgents) return false;
  Bundle b[kAgents];
  for (int k = 0; k < kAgents; ++k)
    for (int g : w.allocation[static_cast<std::size_t>(k)]) b[k] = b[k].with(static_cast<GoodId>(g));
  const Allocation x(b[0], b[1], b[2]);
  if (!x.is_valid()) return false;
  const int i = *w.agent_i, j = *w.agent_j;
  const auto g = static_cast<GoodId>(*w.good_g);
  if (!x[j].contains(g)) return false;
  return p.prefers(i, x[j].without(g), x[i]);
}

namespace detail {

std::vector<std::vector<int>> bundles_of(std::initializer_list<Bundle> bundles) {
  std::vector<std::vector<int>> out;
  for (Bundle b : bundles) out.push_back(b.goods());
  return out;
}

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void stamp(VerdictReport& r, const CheckOptions& opt, std::int64_t start_ns) {
  if (opt.timing) r.elapsed_ms = (now_ns() - start_ns) / 1'000'000;
}

}  // namespace detail

}  // namespace efx
