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

#include <cstddef>
#include <optional>
#include <vector>

#include "abelwords/simd/kernels.hpp"
#include "abelwords/word.hpp"

namespace abelwords {

/// Outcome of an A-primitivity test. A non-primitive verdict carries the
/// length of an A-root that was found (a proper divisor of |w|).
struct PrimalityVerdict {
    bool is_a_primitive = true;
    std::optional<std::size_t> witness_root_length;

    friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

/// Checks every proper divisor of |w|; the witness is the smallest root length.
PrimalityVerdict is_a_primitive_oracle(WordView w);

/// Tests only the maximal proper divisors |w|/p for primes p dividing |w|.
PrimalityVerdict is_a_primitive(WordView w,
                                const simd::KernelTable& kernels = simd::active_kernels());

/// O(n) decider for words of a fixed length.
///
/// Construction factors the length once. Each call then (1) tests
/// d = n/gpf(n) directly when gpf(n)^2 does not divide n, (2) caches the
/// Parikh vectors of the length-gpf(n) blocks, and (3) tests every other
/// maximal divisor by summing runs of cached vectors. The cache is a member
/// buffer reused across calls, so one instance must not be shared between
/// threads.
class LinearDecider {
public:
    explicit LinearDecider(std::size_t length,
                           const simd::KernelTable& kernels = simd::active_kernels());

    [[nodiscard]] std::size_t length() const noexcept { return length_; }

    PrimalityVerdict operator()(WordView w);

    /// Boolean-only fast path for enumeration.
    bool is_a_primitive(WordView w) { return (*this)(w).is_a_primitive; }

private:
    bool has_root_direct(WordView w, std::size_t d);
    bool has_root_cached(std::size_t alphabet_size, std::size_t d);

    const simd::KernelTable* kernels_;
    std::size_t length_ = 0;
    std::size_t gpf_ = 0;
    std::optional<std::size_t> eager_divisor_;
    std::vector<std::size_t> cached_divisors_;
    std::vector<Count> planes_;
    std::vector<Count> reference_;
    std::vector<Count> scratch_;
};

PrimalityVerdict is_a_primitive_linear(WordView w,
                                       const simd::KernelTable& kernels = simd::active_kernels());

}  // namespace abelwords
