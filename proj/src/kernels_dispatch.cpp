#include "dhlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace dhlab::kern {

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa select_isa() {
    const char* env = std::getenv("DHLAB_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_ops() != nullptr && cpu_has_avx2_fma())
            return Isa::avx2;
        // "auto" or anything unrecognized falls through to detection
    }
    if (avx2_ops() != nullptr && cpu_has_avx2_fma()) return Isa::avx2;
    return Isa::scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = select_isa();
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const Ops& ops() {
    static const Ops& t = (active_isa() == Isa::avx2) ? *avx2_ops() : scalar_ops();
    return t;
}

void matvec_colmajor(const double* a, std::size_t rows, std::size_t cols,
                     const double* x, double* y) {
    const Ops& k = ops();
    for (std::size_t i = 0; i < rows; ++i) y[i] = 0.0;
    for (std::size_t j = 0; j < cols; ++j) k.axpy(x[j], a + j * rows, y, rows);
}

void matvec_t_colmajor(const double* a, std::size_t rows, std::size_t cols,
                       const double* x, double* y) {
    const Ops& k = ops();
    for (std::size_t j = 0; j < cols; ++j) y[j] = k.dot(a + j * rows, x, rows);
}

double gram_frob_sq_colmajor(const double* a, std::size_t rows, std::size_t cols) {
    const Ops& k = ops();
    double total = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
        const double* cj = a + j * rows;
        const double djj = k.dot(cj, cj, rows);
        total += djj * djj;
        for (std::size_t l = j + 1; l < cols; ++l) {
            const double d = k.dot(cj, a + l * rows, rows);
            total += 2.0 * d * d;
        }
    }
    return total;
}

}  // namespace dhlab::kern
