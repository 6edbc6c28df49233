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

#include "abelwords/simd/kernels.hpp"

namespace abelwords::simd::detail {

std::size_t count_letter_scalar(std::span<const Letter> data, Letter letter);
std::uint64_t sum_counts_scalar(std::span<const Count> data);
bool all_equal_scalar(std::span<const Count> data, Count value);

#if defined(ABELWORDS_HAVE_AVX2)
std::size_t count_letter_avx2(std::span<const Letter> data, Letter letter);
std::uint64_t sum_counts_avx2(std::span<const Count> data);
bool all_equal_avx2(std::span<const Count> data, Count value);
#endif

}  // namespace abelwords::simd::detail
