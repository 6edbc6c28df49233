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

// Test-only helpers. The brute-force routines here deliberately avoid the
// library's algorithms so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "abelwords/word.hpp"

namespace abelwords::testing {

inline Word W(std::string_view text) { return Word::from_string(text); }
inline Word W(std::string_view text, std::size_t k) { return Word::from_string(text, k); }

namespace brute {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

inline std::vector<std::uint32_t> counts(std::span<const Letter> letters, std::size_t k) {
    std::vector<std::uint32_t> c(k, 0);
    for (const auto l : letters) ++c[l];
    return c;
}

inline bool has_root(std::span<const Letter> letters, std::size_t d, std::size_t k) {
    const auto first = counts(letters.subspan(0, d), k);
    for (std::size_t i = d; i < letters.size(); i += d) {
        if (counts(letters.subspan(i, d), k) != first) return false;
    }
    return true;
}

inline bool is_a_primitive(std::span<const Letter> letters, std::size_t k) {
    const auto n = letters.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && has_root(letters, d, k)) return false;
    }
    return true;
}

inline bool is_primitive(std::span<const Letter> letters) {
    const auto n = letters.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool power = true;
        for (std::size_t i = d; i < n && power; ++i) power = letters[i] == letters[i - d];
        if (power) return false;
    }
    return true;
}

/// Exact maximum antichain size under divisibility, by include/exclude
/// search over every subset (with a size bound to prune).
inline std::size_t max_antichain_size(const std::vector<std::uint64_t>& values) {
    std::size_t best = 0;
    std::vector<std::uint64_t> chosen;
    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (chosen.size() + (values.size() - i) <= best) return;
        if (i == values.size()) {
            best = std::max(best, chosen.size());
            return;
        }
        const auto v = values[i];
        const bool compatible = std::none_of(chosen.begin(), chosen.end(), [v](std::uint64_t c) {
            return v % c == 0 || c % v == 0;
        });
        if (compatible) {
            chosen.push_back(v);
            search(i + 1);
            chosen.pop_back();
        }
        search(i + 1);
    };
    search(0);
    return best;
}

}  // namespace brute

/// All words of length n over k letters, lexicographic.
inline void all_words(std::size_t k, std::size_t n,
                      const std::function<void(const std::vector<Letter>&)>& visit) {
    std::vector<Letter> w(n, 0);
    while (true) {
        visit(w);
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (w[pos] + 1u < k) {
                ++w[pos];
                break;
            }
            w[pos] = 0;
            if (pos == 0) return;
        }
        if (n == 0) return;
    }
}

inline constexpr std::uint64_t kSeed = 0x5eed'ab31'0001ULL;

inline std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(k - 1));
    std::vector<Letter> w(n);
    for (auto& l : w) l = static_cast<Letter>(pick(rng));
    return w;
}

}  // namespace abelwords::testing
