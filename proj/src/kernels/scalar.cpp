#include <algorithm>

#include "efx/kernels.hpp"

namespace efx::kernels::scalar {

void scan_allocations(const AgentKeys& keys, std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit) {
  for (std::size_t k = 0; k < packed.size(); ++k) {
    const std::uint32_t word = packed[k];
    const std::uint32_t bundle[kAgents] = {word & 0xFFu, (word >> 8) & 0xFFu, (word >> 16) & 0xFFu};
    std::uint8_t ok = 0;
    std::uint32_t worst = 0;
    for (int i = 0; i < kAgents; ++i) {
      const auto& table = keys.tables[static_cast<std::size_t>(i)];
      const std::uint32_t own = table[bundle[i]];
      bool envy = false;
      for (int j = 0; j < kAgents; ++j) {
        for (int g = 0; g < kGoods; ++g) {
          const std::uint32_t bit = 1u << g;
          if (!(bundle[j] & bit)) continue;
          const std::uint32_t other = table[bundle[j] & ~bit];
          if (other > own) {
            envy = true;
            worst = std::max(worst, other - own);
          }
        }
      }
      if (!envy) ok = static_cast<std::uint8_t>(ok | (1u << i));
    }
    feasible[k] = ok;
    deficit[k] = worst;
  }
}

Violations strict_consistency_violations(const KeyTable& r, const KeyTable& f) {
  Violations out;
  for (int s = 0; s < kBundles; ++s)
    for (int t = 0; t < kBundles; ++t)
      if (r[s] > r[t] && f[s] <= f[t]) {
        if (!out.first) out.first = {s, t};
        ++out.count;
      }
  return out;
}

Violations monotone_violations(const KeyTable& f) {
  Violations out;
  for (int s = 0; s < kBundles; ++s)
    for (int g = 0; g < kGoods; ++g) {
      if ((s >> g) & 1) continue;
      if (f[s | (1 << g)] < f[s]) {
        if (!out.first) out.first = {s, g};
        ++out.count;
      }
    }
  return out;
}

}  // namespace efx::kernels::scalar
