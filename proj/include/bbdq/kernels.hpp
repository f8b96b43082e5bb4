#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace bbdq::kern {

/// Instruction set backing the packed-bit kernels. Selected once at startup
/// from CPU capabilities; overridable for testing via force_isa() or by
/// setting BBDQ_KERNELS=scalar in the environment.
enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string isa_name(Isa isa);
void force_isa(Isa isa);

/// dst[i] ^= src[i] for i in [0, n). The workhorse of F2 row elimination.
void xor_words(uint64_t* dst, const uint64_t* src, size_t n);

/// Total popcount of p[0..n).
uint64_t popcount_words(const uint64_t* p, size_t n);

/// Parity of popcount(a & b) over [0, n): the F2 inner product of two
/// packed bit vectors.
bool and_parity(const uint64_t* a, const uint64_t* b, size_t n);

// Scalar reference implementations, always available; the dispatched entry
// points above must agree with these bit-for-bit.
namespace scalar {
void xor_words(uint64_t* dst, const uint64_t* src, size_t n);
uint64_t popcount_words(const uint64_t* p, size_t n);
bool and_parity(const uint64_t* a, const uint64_t* b, size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void xor_words(uint64_t* dst, const uint64_t* src, size_t n);
uint64_t popcount_words(const uint64_t* p, size_t n);
bool and_parity(const uint64_t* a, const uint64_t* b, size_t n);
}  // namespace avx2
#endif

}  // namespace bbdq::kern
