#include "picseq/exactla/kernels.hpp"

namespace picseq::exactla::kernels {
namespace {

void axpy_scalar(Residue* dst, const Residue* src, std::size_t n, Residue c, int p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = (dst[i] + c * src[i]) % p;
  }
}

void scale_scalar(Residue* dst, std::size_t n, Residue c, int p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = (c * dst[i]) % p;
  }
}

constexpr KernelTable kScalar{"scalar", &axpy_scalar, &scale_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace picseq::exactla::kernels
