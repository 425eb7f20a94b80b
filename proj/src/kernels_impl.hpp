#pragma once

#include "srmat/kernels.hpp"

namespace srmat::kernels::detail {

template <SatWord T>
const KernelTable<T>& scalar_table();

// Defined only when the SSE4.1 translation unit is compiled in.
template <SatWord T>
const KernelTable<T>& sse41_table();

LaneBlock<std::uint32_t> addsat_overflow_fix_scalar(LaneBlock<std::uint32_t> a,
                                                    LaneBlock<std::uint32_t> b);
LaneBlock<std::uint32_t> addsat_overflow_fix_sse41(LaneBlock<std::uint32_t> a,
                                                   LaneBlock<std::uint32_t> b);

}  // namespace srmat::kernels::detail
