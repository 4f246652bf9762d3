#include <cstdlib>
#include <cstring>

#include "gbesov/kernels.hpp"

namespace gbesov::kernels {

#if GBESOV_HAVE_AVX2_TU
const Ops& avx2_ops();
#endif
#if GBESOV_HAVE_NEON_TU
const Ops& neon_ops();
#endif

namespace {

const Ops* detect_simd() {
#if GBESOV_HAVE_AVX2_TU
#if defined(__GNUC__) || defined(__clang__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_ops();
#endif
#endif
#if GBESOV_HAVE_NEON_TU
    return &neon_ops();  // baseline on aarch64
#endif
    return nullptr;
}

const Ops* select() {
    const Ops* simd = detect_simd();
    if (const char* env = std::getenv("GBESOV_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (simd && std::strcmp(env, simd->name) == 0) return simd;
        // unknown or unavailable request: fall through to the default
    }
    return simd ? simd : &scalar_ops();
}

}  // namespace

const Ops& ops() {
    static const Ops* chosen = select();
    return *chosen;
}

const Ops* simd_ops() {
    static const Ops* simd = detect_simd();
    return simd;
}

}  // namespace gbesov::kernels
