#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"
#include "picseq/error.hpp"

namespace picseq::exactla::kernels {

const KernelTable* avx2_table() noexcept {
#ifdef PICSEQ_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* pin = std::getenv("PICSEQ_KERNELS");
    if (pin != nullptr && std::strcmp(pin, "scalar") == 0) return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

void axpy(std::span<Residue> dst, std::span<const Residue> src, Residue c, int p) {
  if (src.size() < dst.size()) throw Error(ErrorKind::DimensionMismatch, "axpy: source shorter than destination");
  active().axpy(dst.data(), src.data(), dst.size(), c, p);
}

void scale(std::span<Residue> dst, Residue c, int p) {
  active().scale(dst.data(), dst.size(), c, p);
}

}  // namespace picseq::exactla::kernels
