#include "clarke/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace clarke::kernels {

#if defined(CLARKE_KERNELS_AVX2)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(CLARKE_KERNELS_AVX2)
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& active_ops() {
  static const Ops* selected = [] {
    const char* env = std::getenv("CLARKE_KIT_SIMD");
    if (env != nullptr) {
      if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
      if (std::strcmp(env, "avx2") == 0 && avx2_ops() != nullptr) return avx2_ops();
    }
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
  }();
  return *selected;
}

}  // namespace clarke::kernels
