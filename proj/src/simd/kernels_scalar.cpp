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

#include "kernels_impl.hpp"

namespace abelwords::simd::detail {

std::size_t count_letter_scalar(std::span<const Letter> data, Letter letter) {
    std::size_t total = 0;
    for (const auto c : data) total += (c == letter);
    return total;
}

std::uint64_t sum_counts_scalar(std::span<const Count> data) {
    std::uint64_t total = 0;
    for (const auto v : data) total += v;
    return total;
}

bool all_equal_scalar(std::span<const Count> data, Count value) {
    for (const auto v : data) {
        if (v != value) return false;
    }
    return true;
}

}  // namespace abelwords::simd::detail
