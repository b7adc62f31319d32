#pragma once

// Batched evaluation of free-group words in a finite group.
//
// A batch holds `batch` points of K^dims in structure-of-arrays layout:
// coords[c * batch + lane] is coordinate c (0-based) of point `lane`. Each
// word of the program is evaluated at every point and written to
// out[w * batch + lane].
//
// The scalar kernel is the reference; the AVX2 kernel must agree with it
// bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "freecoset/finite_group.hpp"
#include "freecoset/word.hpp"

namespace freecoset::kernels {

// Lookup tables with products pre-scaled by the group order, so that the
// running index is acc*n + c without a multiply:
//   step[s*n*n + a*n + c] = n * (a * c^(s ? -1 : 1))
//   descale[a*n] = a
struct GroupTable {
  explicit GroupTable(const FiniteGroup& k);

  std::int32_t order;
  std::int32_t scaled_unit;
  std::vector<std::int32_t> step;
  std::vector<std::int32_t> descale;
};

struct WordProgram {
  // Compiles words whose generator indices are all <= dims. Throws
  // DomainError otherwise.
  WordProgram(std::span<const Word> words, std::uint32_t dims);

  std::size_t words() const { return starts.size() - 1; }

  std::uint32_t dims;
  // Per letter: (coordinate << 1) | inverse.
  std::vector<std::uint32_t> ops;
  std::vector<std::uint32_t> starts;
};

enum class Isa { Scalar, Avx2 };

using EvalBatchFn = void (*)(const GroupTable& table, const WordProgram& program, const std::int32_t* coords,
                             std::size_t batch, std::int32_t* out);

void eval_batch_scalar(const GroupTable& table, const WordProgram& program, const std::int32_t* coords,
                       std::size_t batch, std::int32_t* out);

#if defined(__x86_64__) || defined(_M_X64)
void eval_batch_avx2(const GroupTable& table, const WordProgram& program, const std::int32_t* coords,
                     std::size_t batch, std::int32_t* out);
#endif

bool isa_supported(Isa isa);
Isa best_isa();
EvalBatchFn select(Isa isa);
std::string_view isa_name(Isa isa);
// "scalar", "avx2" or "auto"; throws DomainError otherwise.
Isa parse_isa(std::string_view name);

}  // namespace freecoset::kernels
