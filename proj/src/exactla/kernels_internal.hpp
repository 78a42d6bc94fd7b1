#pragma once

#include "picseq/exactla/kernels.hpp"

namespace picseq::exactla::kernels::detail {

#ifdef PICSEQ_HAVE_AVX2
const KernelTable& avx2_impl() noexcept;
#endif

}  // namespace picseq::exactla::kernels::detail
