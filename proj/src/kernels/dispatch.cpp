#include <atomic>
#include <cstdlib>
#include <string>

#include "amco/core/types.hpp"
#include "amco/kernels/kernels.hpp"

namespace amco::kernels {
namespace {

const Backend* lookup(std::string_view name) {
    if (name == "scalar") return &scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        if (!__builtin_cpu_supports("avx2"))
            throw Error("avx2 backend requested but CPU lacks AVX2");
        return &avx2_backend();
    }
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    if (name == "neon") return &neon_backend();
#endif
    throw Error("unknown or unavailable kernel backend: " + std::string(name));
}

const Backend* detect() {
    if (const char* env = std::getenv("AMCO_KERNELS")) {
        return lookup(env);
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return &avx2_backend();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    return &neon_backend();
#endif
    return &scalar_backend();
}

std::atomic<const Backend*>& slot() {
    static std::atomic<const Backend*> current{detect()};
    return current;
}

}  // namespace

const Backend& active_backend() { return *slot().load(std::memory_order_relaxed); }

void set_active_backend(std::string_view name) {
    slot().store(lookup(name), std::memory_order_relaxed);
}

}  // namespace amco::kernels
