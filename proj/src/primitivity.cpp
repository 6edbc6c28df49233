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

#include "abelwords/primitivity.hpp"

#include "abelwords/error.hpp"
#include "abelwords/numtheory.hpp"

namespace abelwords {

namespace {

void require_nonempty(WordView w) {
    if (w.empty()) throw DomainError("A-primitivity is undefined for the empty word");
}

// Compares each length-d block against the first, stopping at the first
// mismatch.
bool blocks_match(const simd::KernelTable& kernels, WordView w, std::size_t d,
                  std::vector<Count>& reference, std::vector<Count>& scratch) {
    const std::size_t k = w.alphabet_size;
    reference.resize(k);
    scratch.resize(k);
    simd::block_histogram(kernels, w.letters.subspan(0, d), reference);
    for (std::size_t offset = d; offset < w.size(); offset += d) {
        simd::block_histogram(kernels, w.letters.subspan(offset, d), scratch);
        if (scratch != reference) return false;
    }
    return true;
}

}  // namespace

PrimalityVerdict is_a_primitive_oracle(WordView w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    for (const auto d : numtheory::divisors(n)) {
        if (d == n) break;
        if (has_a_root_of_length(w, d)) return {false, d};
    }
    return {};
}

PrimalityVerdict is_a_primitive(WordView w, const simd::KernelTable& kernels) {
    require_nonempty(w);
    const std::size_t n = w.size();
    if (n == 1) return {};

    std::vector<Count> reference;
    std::vector<Count> scratch;
    for (const auto& entry : numtheory::factorize(n).entries()) {
        const std::size_t d = n / entry.prime;
        if (blocks_match(kernels, w, d, reference, scratch)) return {false, d};
    }
    return {};
}

LinearDecider::LinearDecider(std::size_t length, const simd::KernelTable& kernels)
    : kernels_(&kernels), length_(length) {
    if (length == 0) throw DomainError("A-primitivity is undefined for the empty word");
    if (length == 1) return;

    const auto factors = numtheory::factorize(length);
    gpf_ = factors.gpf();
    const bool gpf_squared_divides = (length / gpf_) % gpf_ == 0;
    for (const auto& entry : factors.entries()) {
        const std::size_t d = length / entry.prime;
        if (entry.prime == gpf_ && !gpf_squared_divides) {
            eager_divisor_ = d;
        } else {
            cached_divisors_.push_back(d);
        }
    }
}

bool LinearDecider::has_root_direct(WordView w, std::size_t d) {
    return blocks_match(*kernels_, w, d, reference_, scratch_);
}

bool LinearDecider::has_root_cached(std::size_t alphabet_size, std::size_t d) {
    const std::size_t cached_blocks = length_ / gpf_;
    const std::size_t group = d / gpf_;
    const std::size_t blocks = length_ / d;
    const std::span<const Count> planes(planes_);

    if (group == 1) {
        for (std::size_t c = 0; c < alphabet_size; ++c) {
            const auto plane = planes.subspan(c * cached_blocks, cached_blocks);
            if (!kernels_->all_equal(plane, plane[0])) return false;
        }
        return true;
    }

    reference_.resize(alphabet_size);
    for (std::size_t c = 0; c < alphabet_size; ++c) {
        reference_[c] = static_cast<Count>(
            kernels_->sum_counts(planes.subspan(c * cached_blocks, group)));
    }
    for (std::size_t j = 1; j < blocks; ++j) {
        for (std::size_t c = 0; c < alphabet_size; ++c) {
            const auto run = planes.subspan(c * cached_blocks + j * group, group);
            if (kernels_->sum_counts(run) != reference_[c]) return false;
        }
    }
    return true;
}

PrimalityVerdict LinearDecider::operator()(WordView w) {
    if (w.size() != length_) throw DomainError("LinearDecider: word length mismatch");
    if (length_ == 1) return {};

    if (eager_divisor_ && has_root_direct(w, *eager_divisor_)) return {false, *eager_divisor_};
    if (cached_divisors_.empty()) return {};

    const std::size_t k = w.alphabet_size;
    planes_.resize(k * (length_ / gpf_));
    simd::block_planes(*kernels_, w, gpf_, planes_);
    for (const auto d : cached_divisors_) {
        if (has_root_cached(k, d)) return {false, d};
    }
    return {};
}

PrimalityVerdict is_a_primitive_linear(WordView w, const simd::KernelTable& kernels) {
    require_nonempty(w);
    LinearDecider decider(w.size(), kernels);
    return decider(w);
}

}  // namespace abelwords
