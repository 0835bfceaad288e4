// Compiled with -mavx2; only called after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "efx/kernels.hpp"

namespace efx::kernels::avx2 {

namespace {

inline __m256i gather(const KeyTable& table, __m256i idx) {
  return _mm256_i32gather_epi32(reinterpret_cast<const int*>(table.data()), idx, 4);
}

inline int lane_mask(__m256i v) { return _mm256_movemask_ps(_mm256_castsi256_ps(v)); }

}  // namespace

void scan_allocations(const AgentKeys& keys, std::span<const std::uint32_t> packed,
                      std::span<std::uint8_t> feasible, std::span<std::uint32_t> deficit) {
  const std::size_t n = packed.size();
  const __m256i byte = _mm256_set1_epi32(0xFF);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i word = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(packed.data() + k));
    const __m256i bundle[kAgents] = {
        _mm256_and_si256(word, byte),
        _mm256_and_si256(_mm256_srli_epi32(word, 8), byte),
        _mm256_and_si256(_mm256_srli_epi32(word, 16), byte),
    };
    __m256i worst = _mm256_setzero_si256();
    int ok_bits[kAgents];
    for (int i = 0; i < kAgents; ++i) {
      const KeyTable& table = keys.tables[static_cast<std::size_t>(i)];
      const __m256i own = gather(table, bundle[i]);
      __m256i envy = _mm256_setzero_si256();
      for (int j = 0; j < kAgents; ++j) {
        for (int g = 0; g < kGoods; ++g) {
          const __m256i bit = _mm256_set1_epi32(1 << g);
          const __m256i has = _mm256_cmpeq_epi32(_mm256_and_si256(bundle[j], bit), bit);
          const __m256i other = gather(table, _mm256_andnot_si256(bit, bundle[j]));
          const __m256i gt = _mm256_and_si256(has, _mm256_cmpgt_epi32(other, own));
          envy = _mm256_or_si256(envy, gt);
          worst = _mm256_max_epi32(worst, _mm256_and_si256(gt, _mm256_sub_epi32(other, own)));
        }
      }
      ok_bits[i] = ~lane_mask(envy) & 0xFF;
    }
    alignas(32) std::uint32_t worst_out[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(worst_out), worst);
    for (int lane = 0; lane < 8; ++lane) {
      std::uint8_t ok = 0;
      for (int i = 0; i < kAgents; ++i)
        if ((ok_bits[i] >> lane) & 1) ok = static_cast<std::uint8_t>(ok | (1u << i));
      feasible[k + static_cast<std::size_t>(lane)] = ok;
      deficit[k + static_cast<std::size_t>(lane)] = worst_out[lane];
    }
  }
  if (k < n)
    scalar::scan_allocations(keys, packed.subspan(k), feasible.subspan(k), deficit.subspan(k));
}

Violations strict_consistency_violations(const KeyTable& r, const KeyTable& f) {
  Violations out;
  for (int s = 0; s < kBundles; ++s) {
    const __m256i rs = _mm256_set1_epi32(static_cast<int>(r[static_cast<std::size_t>(s)]));
    const __m256i fs = _mm256_set1_epi32(static_cast<int>(f[static_cast<std::size_t>(s)]));
    for (int t = 0; t < kBundles; t += 8) {
      const __m256i rt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r.data() + t));
      const __m256i ft = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.data() + t));
      // r[s] > r[t] and not (f[s] > f[t])
      const __m256i bad = _mm256_andnot_si256(_mm256_cmpgt_epi32(fs, ft), _mm256_cmpgt_epi32(rs, rt));
      const int mask = lane_mask(bad);
      if (mask) {
        if (!out.first) out.first = {s, t + std::countr_zero(static_cast<unsigned>(mask))};
        out.count += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(mask)));
      }
    }
  }
  return out;
}

Violations monotone_violations(const KeyTable& f) {
  Violations out;
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  for (int base = 0; base < kBundles; base += 8) {
    const __m256i s = _mm256_add_epi32(_mm256_set1_epi32(base), lane_offsets);
    const __m256i fs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.data() + base));
    int masks[kGoods];
    for (int g = 0; g < kGoods; ++g) {
      const __m256i bit = _mm256_set1_epi32(1 << g);
      const __m256i absent = _mm256_cmpeq_epi32(_mm256_and_si256(s, bit), _mm256_setzero_si256());
      const __m256i grown = gather(f, _mm256_or_si256(s, bit));
      masks[g] = lane_mask(_mm256_and_si256(absent, _mm256_cmpgt_epi32(fs, grown)));
      out.count += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(masks[g])));
    }
    if (!out.first) {
      for (int lane = 0; lane < 8 && !out.first; ++lane)
        for (int g = 0; g < kGoods; ++g)
          if ((masks[g] >> lane) & 1) {
            out.first = {base + lane, g};
            break;
          }
    }
  }
  return out;
}

}  // namespace efx::kernels::avx2
