#include "qising/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qising::kernels {

const Backend& backend() {
    static const Backend* chosen = [] {
        const char* env = std::getenv("QISING_KERNEL");
        std::string want = env ? env : "auto";
#if defined(__x86_64__)
        if (want == "avx2") {
            if (!avx2_supported()) throw std::runtime_error("QISING_KERNEL=avx2 but CPU lacks AVX2");
            return &avx2_backend();
        }
        if (want == "scalar") return &scalar_backend();
        return avx2_supported() ? &avx2_backend() : &scalar_backend();
#else
        if (want == "avx2") throw std::runtime_error("AVX2 backend unavailable on this arch");
        return &scalar_backend();
#endif
    }();
    return *chosen;
}

}  // namespace qising::kernels
