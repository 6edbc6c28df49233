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

#pragma once

// Data-parallel inner loops behind the fast A-primitivity deciders.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant.
// The variant is chosen once at runtime; ABELWORDS_SIMD=scalar forces the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>

#include "abelwords/word.hpp"

namespace abelwords::simd {

struct KernelTable {
    const char* name;

    /// Occurrences of `letter` in `data`.
    std::size_t (*count_letter)(std::span<const Letter> data, Letter letter);

    /// Sum of `data`, widened to 64 bits.
    std::uint64_t (*sum_counts)(std::span<const Count> data);

    /// True iff every element of `data` equals `value`.
    bool (*all_equal)(std::span<const Count> data, Count value);
};

const KernelTable& scalar_kernels() noexcept;

/// AVX2 table, or nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Best table for this machine, honouring ABELWORDS_SIMD.
const KernelTable& active_kernels() noexcept;

/// Writes the Parikh vector of `block` into `out` (size = alphabet size).
/// Long blocks over small alphabets go through count_letter; everything else
/// is a scalar histogram.
void block_histogram(const KernelTable& kernels, std::span<const Letter> block,
                     std::span<Count> out);

/// Letter-major block counts: planes[c * num_blocks + i] is the number of
/// occurrences of letter c in the i-th length-`block_length` block.
void block_planes(const KernelTable& kernels, WordView w, std::size_t block_length,
                  std::span<Count> planes);

}  // namespace abelwords::simd
