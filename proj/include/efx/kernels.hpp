#pragma once

// Data-parallel inner loops of the exhaustive checkers.
//
// Every kernel has a scalar reference implementation and an AVX2 variant that
// evaluates eight allocations (or eight bundles) per instruction through
// gathers on 256-entry key tables. The AVX2 path is chosen at runtime when
// the CPU supports it; EFX_KERNEL=scalar in the environment forces the
// reference path. Both paths must produce identical outputs.
//
// Key tables hold order-preserving integer encodings of ranks or values and
// must stay below 2^31 (the vector path uses signed compares).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "efx/core.hpp"

namespace efx::kernels {

enum class Backend { scalar, avx2 };

bool backend_available(Backend b);
/// avx2 when available and not overridden by EFX_KERNEL=scalar.
Backend best_backend();
const char* backend_name(Backend b);

using KeyTable = std::array<std::uint32_t, kBundles>;

struct alignas(32) AgentKeys {
  std::array<KeyTable, kAgents> tables{};
};

/// For packed allocations (b0 | b1 << 8 | b2 << 16):
///   feasible[k] bit i  <=> agent i is EFX-feasible (no strict envy after any removal)
///   deficit[k]         =   max over (i, j, g in X_j) of max(0, key_i(X_j\g) - key_i(X_i))
void scan_allocations(Backend backend, const AgentKeys& keys,
                      std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit);

struct Violations {
  std::uint64_t count = 0;
  /// First violation in the kernel's documented order.
  std::optional<std::pair<int, int>> first;
  bool operator==(const Violations&) const = default;
};

/// Pairs (s, t) with r[s] > r[t] but f[s] <= f[t]; first in row-major (s, t) order.
Violations strict_consistency_violations(Backend backend, const KeyTable& r, const KeyTable& f);

/// Pairs (s, g) with g not in s and f[s ∪ {g}] < f[s]; first in (s, g) order.
Violations monotone_violations(Backend backend, const KeyTable& f);

namespace scalar {
void scan_allocations(const AgentKeys& keys, std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit);
Violations strict_consistency_violations(const KeyTable& r, const KeyTable& f);
Violations monotone_violations(const KeyTable& f);
}  // namespace scalar

#if defined(EFX_HAVE_AVX2_KERNELS)
namespace avx2 {
void scan_allocations(const AgentKeys& keys, std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit);
Violations strict_consistency_violations(const KeyTable& r, const KeyTable& f);
Violations monotone_violations(const KeyTable& f);
}  // namespace avx2
#endif

}  // namespace efx::kernels
