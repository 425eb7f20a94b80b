#include "srmat/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace srmat::kernels {
namespace {

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

bool cpu_has_sse41() {
#if SRMAT_HAVE_SSE41 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("sse4.1");
#else
  return false;
#endif
}

bool scalar_requested_by_env() {
  const char* v = std::getenv("SRMAT_FORCE_SCALAR");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::sse41:
      return "sse4.1";
  }
  return "unknown";
}

bool vector_supported() {
  static const bool supported = cpu_has_sse41();
  return supported;
}

Isa detected_isa() {
  static const Isa isa = (vector_supported() && !scalar_requested_by_env()) ? Isa::sse41 : Isa::scalar;
  return isa;
}

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  return o == kNoOverride ? detected_isa() : static_cast<Isa>(o);
}

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::sse41 && !vector_supported()) {
    throw std::runtime_error("vector kernels are not available on this machine");
  }
  g_override.store(isa ? static_cast<int>(*isa) : kNoOverride, std::memory_order_relaxed);
}

ScopedIsa::ScopedIsa(Isa isa) {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o != kNoOverride) previous_ = static_cast<Isa>(o);
  force_isa(isa);
}

ScopedIsa::~ScopedIsa() { force_isa(previous_); }

template <SatWord T>
const KernelTable<T>& table_for(Isa isa) {
#if SRMAT_HAVE_SSE41
  if (isa == Isa::sse41) {
    if (!vector_supported()) throw std::runtime_error("vector kernels are not available on this machine");
    return detail::sse41_table<T>();
  }
#else
  if (isa == Isa::sse41) throw std::runtime_error("vector kernels were not compiled in");
#endif
  return detail::scalar_table<T>();
}

template <SatWord T>
const KernelTable<T>& active_table() {
  return table_for<T>(active_isa());
}

template const KernelTable<std::uint8_t>& table_for<std::uint8_t>(Isa);
template const KernelTable<std::uint16_t>& table_for<std::uint16_t>(Isa);
template const KernelTable<std::uint32_t>& table_for<std::uint32_t>(Isa);
template const KernelTable<std::uint8_t>& active_table<std::uint8_t>();
template const KernelTable<std::uint16_t>& active_table<std::uint16_t>();
template const KernelTable<std::uint32_t>& active_table<std::uint32_t>();

LaneBlock<std::uint32_t> addsat_overflow_fix(LaneBlock<std::uint32_t> a, LaneBlock<std::uint32_t> b) {
#if SRMAT_HAVE_SSE41
  if (active_isa() == Isa::sse41) return detail::addsat_overflow_fix_sse41(a, b);
#endif
  return detail::addsat_overflow_fix_scalar(a, b);
}

}  // namespace srmat::kernels
