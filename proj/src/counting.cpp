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

#include "abelwords/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "abelwords/error.hpp"
#include "abelwords/numtheory.hpp"
#include "abelwords/primitivity.hpp"

namespace abelwords::counting {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

void require_alphabet(unsigned k) {
    if (k < 1 || k > kMaxAlphabetSize) throw DomainError("alphabet size must be in [1, 256]");
}

void require_length(std::uint64_t n) {
    if (n < 1) throw DomainError("word length must be >= 1");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

BigInt power(unsigned base, std::uint64_t exponent) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

// Counts A-primitive words whose first `prefix_length` letters spell the
// base-k digits of indices claimed from `next_prefix`.
std::uint64_t count_worker(unsigned k, std::size_t n, std::size_t prefix_length,
                           std::uint64_t prefix_count, std::atomic<std::uint64_t>& next_prefix) {
    LinearDecider decider(n);
    std::vector<Letter> letters(n, 0);
    const WordView view{letters, k};
    std::uint64_t found = 0;

    for (std::uint64_t index = next_prefix.fetch_add(1); index < prefix_count;
         index = next_prefix.fetch_add(1)) {
        std::uint64_t digits = index;
        for (std::size_t i = prefix_length; i-- > 0;) {
            letters[i] = static_cast<Letter>(digits % k);
            digits /= k;
        }
        std::fill(letters.begin() + static_cast<std::ptrdiff_t>(prefix_length), letters.end(), 0);

        bool more = true;
        while (more) {
            found += decider.is_a_primitive(view);
            // Odometer over the suffix positions.
            more = false;
            for (std::size_t pos = n; pos > prefix_length;) {
                --pos;
                if (letters[pos] + 1u < k) {
                    ++letters[pos];
                    more = true;
                    break;
                }
                letters[pos] = 0;
            }
        }
    }
    return found;
}

}  // namespace

std::uint64_t default_budget() {
    const char* value = std::getenv("ABELWORDS_BUDGET");
    if (value == nullptr || *value == '\0') return kDefaultBudget;
    char* end = nullptr;
    const auto parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0') {
        throw DomainError(std::string("ABELWORDS_BUDGET is not an integer: ") + value);
    }
    return parsed;
}

std::uint64_t enumeration_cost(unsigned k, std::uint64_t n) {
    std::uint64_t words = 1;
    for (std::uint64_t i = 0; i < n && words != kSaturated; ++i) words = saturating_mul(words, k);
    return saturating_mul(words, n);
}

BigInt psi(unsigned k, std::uint64_t n) {
    require_alphabet(k);
    require_length(n);
    BigInt total = 0;
    for (const auto d : numtheory::divisors(n)) {
        const int mu = numtheory::mobius(d);
        if (mu != 0) total += mu * power(k, n / d);
    }
    return total;
}

BigInt psi_a(unsigned k, std::uint64_t n, const EnumerationOptions& options) {
    require_alphabet(k);
    require_length(n);
    const auto cost = enumeration_cost(k, n);
    if (cost > options.budget) {
        throw ResourceError("enumeration budget exceeded: psi_a(" + std::to_string(k) + ", " +
                            std::to_string(n) + ") needs " +
                            (cost == kSaturated ? std::string("more than 2^64")
                                                : std::to_string(cost)) +
                            " weighted word-evaluations, budget is " +
                            std::to_string(options.budget) + " (ABELWORDS_BUDGET)");
    }

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(threads, 1u);

    // Enough prefixes to keep every worker busy; never more than the word.
    std::size_t prefix_length = 0;
    std::uint64_t prefix_count = 1;
    while (prefix_length < n && prefix_count < std::uint64_t{8} * threads && k > 1) {
        prefix_count *= k;
        ++prefix_length;
    }

    std::atomic<std::uint64_t> next_prefix{0};
    std::atomic<std::uint64_t> total{0};
    const auto run = [&] {
        total += count_worker(k, static_cast<std::size_t>(n), prefix_length, prefix_count,
                              next_prefix);
    };
    if (threads == 1) {
        run();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) workers.emplace_back(run);
    }
    return BigInt(total.load());
}

BigInt delta(unsigned k, std::uint64_t n, const EnumerationOptions& options) {
    return psi(k, n) - psi_a(k, n, options);
}

BigInt multinomial(std::span<const std::uint64_t> parts) {
    // Product of binomials C(n_1 + ... + n_i, n_i).
    BigInt result = 1;
    std::uint64_t running = 0;
    for (const auto part : parts) {
        for (std::uint64_t j = 1; j <= part; ++j) {
            ++running;
            result *= running;
            result /= j;
        }
    }
    return result;
}

BigInt delta_prime_power(unsigned k, std::uint64_t p, unsigned r) {
    require_alphabet(k);
    if (!numtheory::is_prime(p)) throw DomainError("delta_prime_power: p must be prime");
    if (r < 2) throw DomainError("delta_prime_power: r must be >= 2");

    std::uint64_t block = 1;
    for (unsigned i = 0; i + 1 < r; ++i) {
        if (block > kSaturated / p) throw DomainError("delta_prime_power: p^(r-1) overflows");
        block *= p;
    }

    BigInt total = 0;
    std::vector<std::uint64_t> parts(k, 0);
    auto recurse = [&](auto& self, std::size_t i, std::uint64_t remaining) -> void {
        if (i + 1 == k) {
            parts[i] = remaining;
            const BigInt c = multinomial(parts);
            total += c * (boost::multiprecision::pow(c, static_cast<unsigned>(p - 1)) - 1);
            return;
        }
        for (std::uint64_t v = 0; v <= remaining; ++v) {
            parts[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    recurse(recurse, 0, block);
    return total;
}

CountRow count_row(unsigned k, std::uint64_t n, const EnumerationOptions& options) {
    CountRow row;
    row.n = n;
    row.psi = psi(k, n);
    if (n == 1) {
        row.psi_a = k;
    } else if (numtheory::is_prime(n)) {
        row.psi_a = power(k, n) - k;
    } else {
        row.psi_a = psi_a(k, n, options);
    }
    row.delta = row.psi - row.psi_a;
    return row;
}

CountTable figure1_table(unsigned k, std::uint64_t max_n, const EnumerationOptions& options) {
    require_alphabet(k);
    require_length(max_n);
    for (std::uint64_t n = 4; n <= max_n; ++n) {
        if (numtheory::is_prime(n)) continue;
        if (enumeration_cost(k, n) > options.budget) {
            // Reuse psi_a's message for the first row over budget.
            (void)psi_a(k, n, options);
        }
    }
    CountTable table{k, {}};
    for (std::uint64_t n = 1; n <= max_n; ++n) table.rows.push_back(count_row(k, n, options));
    return table;
}

bool is_classically_primitive(WordView w) {
    if (w.empty()) throw DomainError("classical primitivity is undefined for the empty word");
    const std::size_t n = w.size();
    for (const auto& entry : numtheory::factorize(n).entries()) {
        const std::size_t d = n / entry.prime;
        if (std::equal(w.letters.begin() + static_cast<std::ptrdiff_t>(d), w.letters.end(),
                       w.letters.begin())) {
            return false;
        }
    }
    return true;
}

void for_each_word(unsigned k, std::size_t n, const std::function<void(WordView)>& visit) {
    require_alphabet(k);
    std::vector<Letter> letters(n, 0);
    const WordView view{letters, k};
    while (true) {
        visit(view);
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (letters[pos] + 1u < k) {
                ++letters[pos];
                break;
            }
            letters[pos] = 0;
            if (pos == 0) return;
        }
        if (n == 0) return;
    }
}

}  // namespace abelwords::counting
