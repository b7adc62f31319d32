#include "freecoset/errors.hpp"
#include "freecoset/kernels/word_eval.hpp"

namespace freecoset::kernels {

GroupTable::GroupTable(const FiniteGroup& k)
    : order(static_cast<std::int32_t>(k.order())),
      scaled_unit(static_cast<std::int32_t>(k.unit() * k.order())),
      step(2 * std::size_t{k.order()} * k.order()),
      descale(std::size_t{k.order()} * k.order()) {
  const std::uint32_t n = k.order();
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      step[a * n + c] = static_cast<std::int32_t>(k.mul(a, c) * n);
      step[n * n + a * n + c] = static_cast<std::int32_t>(k.mul(a, k.inv(c)) * n);
    }
    descale[a * n] = static_cast<std::int32_t>(a);
  }
}

WordProgram::WordProgram(std::span<const Word> words, std::uint32_t dims) : dims(dims) {
  starts.reserve(words.size() + 1);
  starts.push_back(0);
  for (const Word& w : words) {
    for (Letter l : w) {
      if (l.gen > dims)
        throw DomainError("word mentions x" + std::to_string(l.gen) + " but only " + std::to_string(dims) +
                          " coordinates are available");
      ops.push_back(((l.gen - 1) << 1) | (l.sign == Sign::Minus ? 1u : 0u));
    }
    starts.push_back(static_cast<std::uint32_t>(ops.size()));
  }
}

void eval_batch_scalar(const GroupTable& table, const WordProgram& program, const std::int32_t* coords,
                       std::size_t batch, std::int32_t* out) {
  const std::int32_t nn = table.order * table.order;
  const std::int32_t* step = table.step.data();
  for (std::size_t w = 0; w < program.words(); ++w) {
    const std::uint32_t* op = program.ops.data() + program.starts[w];
    const std::uint32_t* op_end = program.ops.data() + program.starts[w + 1];
    std::int32_t* dst = out + w * batch;
    for (std::size_t lane = 0; lane < batch; ++lane) {
      std::int32_t acc = table.scaled_unit;
      for (const std::uint32_t* p = op; p != op_end; ++p) {
        const std::int32_t c = coords[(*p >> 1) * batch + lane];
        acc = step[acc + c + static_cast<std::int32_t>(*p & 1u) * nn];
      }
      dst[lane] = table.descale[acc];
    }
  }
}

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa best_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

EvalBatchFn select(Isa isa) {
  if (!isa_supported(isa)) throw DomainError("instruction set '" + std::string(isa_name(isa)) + "' not available");
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::Avx2) return &eval_batch_avx2;
#endif
  return &eval_batch_scalar;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return best_isa();
  throw DomainError("unknown kernel '" + std::string(name) + "'");
}

}  // namespace freecoset::kernels
