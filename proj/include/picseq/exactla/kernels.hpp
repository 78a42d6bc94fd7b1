#pragma once

// Row-level arithmetic kernels over F_p.
//
// Every kernel has a portable scalar reference implementation; when the
// library is built with PICSEQ_HAVE_AVX2 and the running CPU reports AVX2,
// a vectorized variant is selected at first use. Both variants must agree
// bit for bit (tests/test_kernels.cpp). Setting PICSEQ_KERNELS=scalar in the
// environment pins the reference path.

#include <cstddef>
#include <span>

#include "picseq/exactla/field.hpp"

namespace picseq::exactla::kernels {

struct KernelTable {
  const char* name;
  // dst[i] = (dst[i] + c * src[i]) mod p, all inputs already reduced
  void (*axpy)(Residue* dst, const Residue* src, std::size_t n, Residue c, int p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(Residue* dst, std::size_t n, Residue c, int p);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// The table used by Mat and Subspace.
const KernelTable& active() noexcept;

void axpy(std::span<Residue> dst, std::span<const Residue> src, Residue c, int p);
void scale(std::span<Residue> dst, Residue c, int p);

}  // namespace picseq::exactla::kernels
