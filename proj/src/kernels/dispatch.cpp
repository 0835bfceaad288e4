#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "efx/kernels.hpp"

namespace efx::kernels {

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(EFX_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  static const Backend chosen = [] {
    const char* forced = std::getenv("EFX_KERNEL");
    if (forced && std::strcmp(forced, "scalar") == 0) return Backend::scalar;
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
  }();
  return chosen;
}

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

namespace {
void require(Backend b) {
  if (!backend_available(b)) throw std::runtime_error(std::string("kernel backend unavailable: ") + backend_name(b));
}
}  // namespace

void scan_allocations(Backend backend, const AgentKeys& keys, std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit) {
  if (feasible.size() < packed.size() || deficit.size() < packed.size())
    throw std::invalid_argument("scan output spans are too small");
  require(backend);
#if defined(EFX_HAVE_AVX2_KERNELS)
  if (backend == Backend::avx2) return avx2::scan_allocations(keys, packed, feasible, deficit);
#endif
  scalar::scan_allocations(keys, packed, feasible, deficit);
}

Violations strict_consistency_violations(Backend backend, const KeyTable& r, const KeyTable& f) {
  require(backend);
#if defined(EFX_HAVE_AVX2_KERNELS)
  if (backend == Backend::avx2) return avx2::strict_consistency_violations(r, f);
#endif
  return scalar::strict_consistency_violations(r, f);
}

Violations monotone_violations(Backend backend, const KeyTable& f) {
  require(backend);
#if defined(EFX_HAVE_AVX2_KERNELS)
  if (backend == Backend::avx2) return avx2::monotone_violations(f);
#endif
  return scalar::monotone_violations(f);
}

}  // namespace efx::kernels
