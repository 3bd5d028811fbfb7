#include "dp_kernels.hpp"

#include <stdexcept>
#include <vector>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MEDIAN_HAVE_AVX2_KERNEL 1
#include <immintrin.h>
#endif

namespace median::detail {

#ifdef MEDIAN_HAVE_AVX2_KERNEL

bool simd_dp_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

// Row i of the table is kept as y[j] = D[i][j] - P[j], where P holds the
// prefix sums of insertion costs along `to`. In that frame the insertion
// recurrence D[i][j] = min(.., D[i][j-1] + ins(to[j-1])) becomes a plain
// running minimum, which is computed with a log-step scan per block and a
// carried minimum across blocks.
__attribute__((target("avx2"))) std::int32_t simd_dp_distance(const Symbol* from, std::size_t n,
                                                               const Symbol* to, std::size_t m,
                                                               const std::int32_t* costs,
                                                               std::size_t sigma) {
    const std::size_t dim = sigma + 1;
    const std::size_t padded = (m + 7) / 8 * 8;
    std::vector<std::int32_t> prefix(padded + 1, 0);
    for (std::size_t j = 1; j <= m; ++j) {
        prefix[j] = prefix[j - 1] + costs[sigma * dim + to[j - 1]];
    }
    // Substitution costs relative to inserting the same target symbol.
    std::vector<std::int32_t> profile(sigma * padded, 0);
    for (std::size_t a = 0; a < sigma; ++a) {
        for (std::size_t j = 0; j < m; ++j) {
            profile[a * padded + j] = costs[a * dim + to[j]] - costs[sigma * dim + to[j]];
        }
    }
    // One extra slot so the unaligned load at j + 1 stays in bounds.
    std::vector<std::int32_t> prev(padded + 8, 0);
    std::vector<std::int32_t> cur(padded + 8, 0);

    constexpr std::int32_t kFar = 1 << 30;
    const __m256i far = _mm256_set1_epi32(kFar);
    const __m256i shift1 = _mm256_setr_epi32(0, 0, 1, 2, 3, 4, 5, 6);
    const __m256i shift2 = _mm256_setr_epi32(0, 0, 0, 1, 2, 3, 4, 5);
    const __m256i shift4 = _mm256_setr_epi32(0, 0, 0, 0, 0, 1, 2, 3);
    const __m256i last = _mm256_set1_epi32(7);

    for (std::size_t i = 0; i < n; ++i) {
        const Symbol a = from[i];
        const std::int32_t del = costs[a * dim + sigma];
        const __m256i del_v = _mm256_set1_epi32(del);
        const std::int32_t* sub = profile.data() + a * padded;
        cur[0] = prev[0] + del;
        __m256i carry = _mm256_set1_epi32(cur[0]);
        for (std::size_t j = 0; j < padded; j += 8) {
            const __m256i diag = _mm256_add_epi32(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + j)),
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sub + j)));
            const __m256i up = _mm256_add_epi32(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + j + 1)), del_v);
            __m256i t = _mm256_min_epi32(diag, up);
            t = _mm256_min_epi32(t, _mm256_blend_epi32(_mm256_permutevar8x32_epi32(t, shift1), far, 0x01));
            t = _mm256_min_epi32(t, _mm256_blend_epi32(_mm256_permutevar8x32_epi32(t, shift2), far, 0x03));
            t = _mm256_min_epi32(t, _mm256_blend_epi32(_mm256_permutevar8x32_epi32(t, shift4), far, 0x0F));
            // The carry only waits on one min per block.
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(cur.data() + j + 1), _mm256_min_epi32(t, carry));
            carry = _mm256_min_epi32(carry, _mm256_permutevar8x32_epi32(t, last));
        }
        std::swap(prev, cur);
    }
    return prev[m] + prefix[m];
}

#else

bool simd_dp_available() { return false; }

std::int32_t simd_dp_distance(const Symbol*, std::size_t, const Symbol*, std::size_t,
                              const std::int32_t*, std::size_t) {
    throw std::logic_error("vectorised edit distance is not available on this target");
}

#endif

}  // namespace median::detail
