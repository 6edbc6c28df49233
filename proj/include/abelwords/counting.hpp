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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelwords/word.hpp"

namespace abelwords::counting {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

/// Budget from ABELWORDS_BUDGET, falling back to kDefaultBudget.
std::uint64_t default_budget();

struct EnumerationOptions {
    /// Maximum weighted word-evaluations (n * k^n) an enumeration may spend.
    std::uint64_t budget = default_budget();
    /// Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;
};

/// Weighted cost n * k^n of enumerating all words of length n, saturating.
std::uint64_t enumeration_cost(unsigned k, std::uint64_t n);

/// Number of (classically) primitive words: sum over d | n of mu(d) k^(n/d).
BigInt psi(unsigned k, std::uint64_t n);

/// Number of A-primitive words, by exhaustive enumeration.
/// Throws ResourceError when the enumeration cost exceeds the budget.
BigInt psi_a(unsigned k, std::uint64_t n, const EnumerationOptions& options = {});

BigInt delta(unsigned k, std::uint64_t n, const EnumerationOptions& options = {});

/// Closed form for prime powers: the sum over ordered k-tuples
/// (n_1, ..., n_k) summing to m = p^(r-1) of C * (C^(p-1) - 1) where C is the
/// multinomial coefficient m! / (n_1! ... n_k!).
BigInt delta_prime_power(unsigned k, std::uint64_t p, unsigned r);

BigInt multinomial(std::span<const std::uint64_t> parts);

struct CountRow {
    std::uint64_t n = 0;
    BigInt psi;
    BigInt psi_a;
    BigInt delta;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountTable {
    unsigned alphabet_size = 0;
    std::vector<CountRow> rows;
};

/// One row: psi_a enumerated, except n = 1 and prime n which use k^n - k
/// (k for n = 1).
CountRow count_row(unsigned k, std::uint64_t n, const EnumerationOptions& options = {});

/// Rows n = 1..max_n. Budget is checked per row before any work starts.
CountTable figure1_table(unsigned k, std::uint64_t max_n,
                         const EnumerationOptions& options = {});

/// Classical primitivity: w is not a proper integer power of a shorter word.
bool is_classically_primitive(WordView w);

/// Visits all k^n words of length n in lexicographic order.
void for_each_word(unsigned k, std::size_t n,
                   const std::function<void(WordView)>& visit);

}  // namespace abelwords::counting
