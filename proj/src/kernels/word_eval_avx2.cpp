// Compiled with -mavx2; only reached after a runtime CPU check.

#include "freecoset/kernels/word_eval.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace freecoset::kernels {

void eval_batch_avx2(const GroupTable& table, const WordProgram& program, const std::int32_t* coords,
                     std::size_t batch, std::int32_t* out) {
  const std::int32_t nn = table.order * table.order;
  const int* step = table.step.data();
  const int* descale = table.descale.data();
  const __m256i unit = _mm256_set1_epi32(table.scaled_unit);
  const __m256i inv_offset = _mm256_set1_epi32(nn);
  const __m256i zero = _mm256_setzero_si256();

  for (std::size_t w = 0; w < program.words(); ++w) {
    const std::uint32_t* op = program.ops.data() + program.starts[w];
    const std::uint32_t* op_end = program.ops.data() + program.starts[w + 1];
    std::int32_t* dst = out + w * batch;

    std::size_t lane = 0;
    // Two independent gather chains per iteration to hide gather latency.
    for (; lane + 16 <= batch; lane += 16) {
      __m256i acc0 = unit;
      __m256i acc1 = unit;
      for (const std::uint32_t* p = op; p != op_end; ++p) {
        const std::int32_t* src = coords + (*p >> 1) * batch + lane;
        const __m256i off = (*p & 1u) ? inv_offset : zero;
        __m256i c0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
        __m256i c1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + 8));
        __m256i i0 = _mm256_add_epi32(acc0, _mm256_add_epi32(c0, off));
        __m256i i1 = _mm256_add_epi32(acc1, _mm256_add_epi32(c1, off));
        acc0 = _mm256_i32gather_epi32(step, i0, 4);
        acc1 = _mm256_i32gather_epi32(step, i1, 4);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + lane), _mm256_i32gather_epi32(descale, acc0, 4));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + lane + 8), _mm256_i32gather_epi32(descale, acc1, 4));
    }
    for (; lane + 8 <= batch; lane += 8) {
      __m256i acc = unit;
      for (const std::uint32_t* p = op; p != op_end; ++p) {
        const std::int32_t* src = coords + (*p >> 1) * batch + lane;
        const __m256i off = (*p & 1u) ? inv_offset : zero;
        __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
        acc = _mm256_i32gather_epi32(step, _mm256_add_epi32(acc, _mm256_add_epi32(c, off)), 4);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + lane), _mm256_i32gather_epi32(descale, acc, 4));
    }
    for (; lane < batch; ++lane) {
      std::int32_t acc = table.scaled_unit;
      for (const std::uint32_t* p = op; p != op_end; ++p) {
        const std::int32_t c = coords[(*p >> 1) * batch + lane];
        acc = step[acc + c + static_cast<std::int32_t>(*p & 1u) * nn];
      }
      dst[lane] = descale[acc];
    }
  }
}

}  // namespace freecoset::kernels

#endif
