/*******************************************************************************
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *******************************************************************************/

// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "kernels_impl.hpp"

namespace abelwords::simd::detail {

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i sum = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(sum)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(sum, 1));
}

}  // namespace

std::size_t count_letter_avx2(std::span<const Letter> data, Letter letter) {
    const auto* p = data.data();
    const std::size_t n = data.size();
    const __m256i needle = _mm256_set1_epi8(static_cast<char>(letter));
    const __m256i zero = _mm256_setzero_si256();

    std::uint64_t total = 0;
    std::size_t i = 0;
    while (n - i >= 32) {
        // Byte lanes count matches; flush through SAD before they can wrap.
        const std::size_t rounds = std::min<std::size_t>((n - i) / 32, 255);
        __m256i acc = zero;
        for (std::size_t r = 0; r < rounds; ++r, i += 32) {
            const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
            acc = _mm256_sub_epi8(acc, _mm256_cmpeq_epi8(v, needle));
        }
        total += hsum_epi64(_mm256_sad_epu8(acc, zero));
    }
    for (; i < n; ++i) total += (p[i] == letter);
    return total;
}

std::uint64_t sum_counts_avx2(std::span<const Count> data) {
    const auto* p = data.data();
    const std::size_t n = data.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        const __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v));
        const __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1));
        acc = _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) total += p[i];
    return total;
}

bool all_equal_avx2(std::span<const Count> data, Count value) {
    const auto* p = data.data();
    const std::size_t n = data.size();
    const __m256i needle = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(v, needle)) != -1) return false;
    }
    for (; i < n; ++i) {
        if (p[i] != value) return false;
    }
    return true;
}

}  // namespace abelwords::simd::detail
