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

#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "abelwords/error.hpp"
#include "kernels_impl.hpp"

namespace abelwords::simd {

namespace {

// Below this block length, or above this alphabet size, one scalar histogram
// pass beats k - 1 vectorized counting passes.
constexpr std::size_t kCountLetterMinBlock = 64;
constexpr std::size_t kCountLetterMaxAlphabet = 8;

const KernelTable kScalar{"scalar", detail::count_letter_scalar, detail::sum_counts_scalar,
                          detail::all_equal_scalar};

#if defined(ABELWORDS_HAVE_AVX2)
const KernelTable kAvx2{"avx2", detail::count_letter_avx2, detail::sum_counts_avx2,
                        detail::all_equal_avx2};
#endif

bool use_counting_passes(std::size_t block_length, std::size_t alphabet_size) {
    return block_length >= kCountLetterMinBlock && alphabet_size <= kCountLetterMaxAlphabet;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(ABELWORDS_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
    static const KernelTable* selected = [] {
        const char* forced = std::getenv("ABELWORDS_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar") return &kScalar;
        const KernelTable* avx2 = avx2_kernels();
        return avx2 != nullptr ? avx2 : &kScalar;
    }();
    return *selected;
}

void block_histogram(const KernelTable& kernels, std::span<const Letter> block,
                     std::span<Count> out) {
    const std::size_t k = out.size();
    if (k == 0) throw DomainError("block_histogram: empty alphabet");
    if (use_counting_passes(block.size(), k)) {
        std::size_t counted = 0;
        for (std::size_t c = 0; c + 1 < k; ++c) {
            const auto hits = kernels.count_letter(block, static_cast<Letter>(c));
            out[c] = static_cast<Count>(hits);
            counted += hits;
        }
        out[k - 1] = static_cast<Count>(block.size() - counted);
        return;
    }
    std::fill(out.begin(), out.end(), 0);
    for (const auto letter : block) ++out[letter];
}

void block_planes(const KernelTable& kernels, WordView w, std::size_t block_length,
                  std::span<Count> planes) {
    if (block_length == 0 || w.size() % block_length != 0) {
        throw DomainError("block_planes: block length must divide the word length");
    }
    const std::size_t k = w.alphabet_size;
    const std::size_t blocks = w.size() / block_length;
    if (planes.size() != k * blocks) throw DomainError("block_planes: plane buffer size");

    const auto* letters = w.letters.data();
    if (use_counting_passes(block_length, k)) {
        for (std::size_t i = 0; i < blocks; ++i) {
            const std::span<const Letter> block(letters + i * block_length, block_length);
            std::size_t counted = 0;
            for (std::size_t c = 0; c + 1 < k; ++c) {
                const auto hits = kernels.count_letter(block, static_cast<Letter>(c));
                planes[c * blocks + i] = static_cast<Count>(hits);
                counted += hits;
            }
            planes[(k - 1) * blocks + i] = static_cast<Count>(block_length - counted);
        }
        return;
    }
    std::fill(planes.begin(), planes.end(), 0);
    for (std::size_t i = 0; i < blocks; ++i) {
        const auto* block = letters + i * block_length;
        for (std::size_t j = 0; j < block_length; ++j) ++planes[block[j] * blocks + i];
    }
}

}  // namespace abelwords::simd
