#include "bbdq/kernels.hpp"

#include <bit>
#include <cstdlib>

namespace bbdq::kern {

namespace scalar {

void xor_words(uint64_t* dst, const uint64_t* src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

uint64_t popcount_words(const uint64_t* p, size_t n) {
    uint64_t total = 0;
    for (size_t i = 0; i < n; i++) {
        total += std::popcount(p[i]);
    }
    return total;
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t n) {
    // popcount parity is additive over XOR, so one final popcount suffices.
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return std::popcount(acc) & 1;
}

}  // namespace scalar

namespace {

struct Dispatch {
    Isa isa;
    void (*xor_words)(uint64_t*, const uint64_t*, size_t);
    uint64_t (*popcount_words)(const uint64_t*, size_t);
    bool (*and_parity)(const uint64_t*, const uint64_t*, size_t);
};

Dispatch pick_dispatch() {
    Dispatch d{Isa::Scalar, &scalar::xor_words, &scalar::popcount_words, &scalar::and_parity};
    const char* env = std::getenv("BBDQ_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") {
        return d;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        d = Dispatch{Isa::Avx2, &avx2::xor_words, &avx2::popcount_words, &avx2::and_parity};
    }
#endif
    return d;
}

Dispatch& dispatch() {
    static Dispatch d = pick_dispatch();
    return d;
}

}  // namespace

Isa active_isa() {
    return dispatch().isa;
}

std::string isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "?";
}

void force_isa(Isa isa) {
    Dispatch& d = dispatch();
    switch (isa) {
        case Isa::Scalar:
            d = Dispatch{Isa::Scalar, &scalar::xor_words, &scalar::popcount_words, &scalar::and_parity};
            break;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (__builtin_cpu_supports("avx2")) {
                d = Dispatch{Isa::Avx2, &avx2::xor_words, &avx2::popcount_words, &avx2::and_parity};
            }
#endif
            break;
    }
}

void xor_words(uint64_t* dst, const uint64_t* src, size_t n) {
    dispatch().xor_words(dst, src, n);
}

uint64_t popcount_words(const uint64_t* p, size_t n) {
    return dispatch().popcount_words(p, n);
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t n) {
    return dispatch().and_parity(a, b, n);
}

}  // namespace bbdq::kern
