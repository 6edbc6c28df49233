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

#include "abelwords/numtheory.hpp"

#include <algorithm>

#include "abelwords/error.hpp"

namespace abelwords::numtheory {

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].exponent == 0 || !is_prime(entries_[i].prime)) {
            throw DomainError("factorization entry is not a prime power");
        }
        if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
            throw DomainError("factorization primes must be strictly increasing");
        }
    }
}

unsigned Factorization::omega_prime() const noexcept {
    unsigned total = 0;
    for (const auto& e : entries_) total += e.exponent;
    return total;
}

std::uint64_t Factorization::num_divisors() const noexcept {
    std::uint64_t total = 1;
    for (const auto& e : entries_) total *= e.exponent + 1;
    return total;
}

std::uint64_t Factorization::gpf() const noexcept {
    return entries_.empty() ? 0 : entries_.back().prime;
}

std::uint64_t Factorization::value() const noexcept {
    std::uint64_t v = 1;
    for (const auto& e : entries_) {
        for (unsigned i = 0; i < e.exponent; ++i) v *= e.prime;
    }
    return v;
}

std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    // Newton from above on the floor root, then round up.
    std::uint64_t x = n;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x * x == n ? x : x + 1;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be >= 1");

    std::vector<PrimePower> entries;
    while (true) {
        bool found = false;
        const std::uint64_t bound = ceil_sqrt(n);
        for (std::uint64_t p = 2; p <= bound && !found; ++p) {
            if (n % p == 0) {
                found = true;
                unsigned exponent = 0;
                while (n % p == 0) {
                    n /= p;
                    ++exponent;
                }
                entries.push_back({p, exponent});
            }
        }
        if (!found) break;
    }
    if (n != 1) entries.push_back({n, 1});

    // The leftover cofactor exceeds every extracted prime, so order holds.
    return Factorization(Factorization::Unchecked{}, std::move(entries));
}

ArithmeticSummary arith(std::uint64_t n) {
    if (n < 2) throw DomainError("arith: n must be >= 2");
    const auto f = factorize(n);
    return {f.omega(), f.omega_prime(), f.num_divisors(), f.gpf()};
}

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius: n must be >= 1");
    const auto f = factorize(n);
    for (const auto& e : f.entries()) {
        if (e.exponent >= 2) return 0;
    }
    return f.omega() % 2 == 0 ? 1 : -1;
}

namespace {

// Expands every divisor whose exponent vector satisfies `accept`.
template <typename Accept>
DivisorSet expand_divisors(const Factorization& f, Accept accept) {
    const auto& entries = f.entries();
    DivisorSet out;

    auto recurse = [&](auto& self, std::size_t i, std::uint64_t value, unsigned sum) -> void {
        if (i == entries.size()) {
            if (accept(sum)) out.push_back(value);
            return;
        }
        std::uint64_t power = 1;
        for (unsigned b = 0; b <= entries[i].exponent; ++b) {
            self(self, i + 1, value * power, sum + b);
            power *= entries[i].prime;
        }
    };
    recurse(recurse, 0, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DivisorSet divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("divisors: n must be >= 1");
    return expand_divisors(factorize(n), [](unsigned) { return true; });
}

DivisorSet middle_antichain(std::uint64_t n) {
    if (n < 2) throw DomainError("middle_antichain: n must be >= 2");
    const auto f = factorize(n);
    const unsigned layer = f.omega_prime() / 2;
    const auto& entries = f.entries();

    // Enumerate exponent vectors with sum == layer directly; branches that
    // cannot reach the layer are cut using the remaining exponent capacity.
    std::vector<unsigned> capacity(entries.size() + 1, 0);
    for (std::size_t i = entries.size(); i-- > 0;) {
        capacity[i] = capacity[i + 1] + entries[i].exponent;
    }

    DivisorSet out;
    auto recurse = [&](auto& self, std::size_t i, std::uint64_t value, unsigned remaining) -> void {
        if (i == entries.size()) {
            if (remaining == 0) out.push_back(value);
            return;
        }
        if (remaining > capacity[i]) return;
        std::uint64_t power = 1;
        const unsigned top = std::min(entries[i].exponent, remaining);
        for (unsigned b = 0; b <= top; ++b) {
            self(self, i + 1, value * power, remaining - b);
            power *= entries[i].prime;
        }
    };
    recurse(recurse, 0, 1, layer);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> multiples_closure(std::uint64_t n) {
    const auto layer = middle_antichain(n);
    std::vector<bool> marked(n + 1, false);
    for (const auto d : layer) {
        for (std::uint64_t m = d; m <= n; m += d) marked[m] = true;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (marked[m]) out.push_back(m);
    }
    return out;
}

bool is_division_free(std::span<const std::uint64_t> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (i == j) continue;
            if (values[i] == 0 || values[j] == 0) {
                throw DomainError("is_division_free: values must be >= 1");
            }
            if (values[j] % values[i] == 0) return false;
        }
    }
    return true;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::uint64_t nth_prime(std::size_t index) {
    if (index == 0) throw DomainError("nth_prime: index starts at 1");
    std::uint64_t candidate = 1;
    std::size_t found = 0;
    while (found < index) {
        ++candidate;
        if (is_prime(candidate)) ++found;
    }
    return candidate;
}

}  // namespace abelwords::numtheory
