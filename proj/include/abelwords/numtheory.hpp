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
#include <span>
#include <utility>
#include <vector>

namespace abelwords::numtheory {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 1, entries ascending by prime.
/// An empty entry list is the factorization of 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> entries);

    [[nodiscard]] const std::vector<PrimePower>& entries() const& noexcept { return entries_; }
    [[nodiscard]] std::vector<PrimePower> entries() && noexcept { return std::move(entries_); }

    /// Number of distinct primes, omega(n).
    [[nodiscard]] std::size_t omega() const noexcept { return entries_.size(); }
    /// Number of primes counted with multiplicity, omega'(n).
    [[nodiscard]] unsigned omega_prime() const noexcept;
    [[nodiscard]] std::uint64_t num_divisors() const noexcept;
    /// Greatest prime factor; 0 for the empty factorization.
    [[nodiscard]] std::uint64_t gpf() const noexcept;
    /// Product of prime^exponent over the entries.
    [[nodiscard]] std::uint64_t value() const noexcept;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    struct Unchecked {};
    Factorization(Unchecked, std::vector<PrimePower> entries) : entries_(std::move(entries)) {}
    friend Factorization factorize(std::uint64_t n);

    std::vector<PrimePower> entries_;
};

using DivisorSet = std::vector<std::uint64_t>;

struct ArithmeticSummary {
    std::size_t omega = 0;
    unsigned omega_prime = 0;
    std::uint64_t num_divisors = 0;
    std::uint64_t gpf = 0;

    friend bool operator==(const ArithmeticSummary&, const ArithmeticSummary&) = default;
};

/// Trial division: repeatedly find the least prime p <= ceil(sqrt(n)) dividing
/// the remaining cofactor, strip its full power, and restart the search from 2.
/// A cofactor other than 1 left over at the end is itself prime.
Factorization factorize(std::uint64_t n);

ArithmeticSummary arith(std::uint64_t n);

int mobius(std::uint64_t n);

/// All divisors of n in ascending order.
DivisorSet divisors(std::uint64_t n);

/// The middle layer of the divisor lattice of n: divisors whose exponent
/// vector sums to floor(omega'(n) / 2). Largest division-free set of divisors.
DivisorSet middle_antichain(std::uint64_t n);

/// Every multiple <= n of an element of middle_antichain(n), ascending, unique.
std::vector<std::uint64_t> multiples_closure(std::uint64_t n);

bool is_division_free(std::span<const std::uint64_t> values);

bool is_prime(std::uint64_t n);

/// The i-th prime with p_1 = 2, found by incremental trial division.
std::uint64_t nth_prime(std::size_t index);

/// Smallest r with r * r >= n.
std::uint64_t ceil_sqrt(std::uint64_t n) noexcept;

}  // namespace abelwords::numtheory
