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

#include "abelwords/constructions.hpp"

#include <limits>
#include <string>

#include "abelwords/error.hpp"
#include "abelwords/numtheory.hpp"

namespace abelwords {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;
constexpr std::uint64_t kMaxConstructedLength = std::numeric_limits<Count>::max();

// aabb(ab)^repeats over {a, b}.
Word aabb_ab_power(std::uint64_t repeats) {
    std::vector<Letter> letters{kA, kA, kB, kB};
    letters.reserve(4 + 2 * repeats);
    for (std::uint64_t i = 0; i < repeats; ++i) {
        letters.push_back(kA);
        letters.push_back(kB);
    }
    return Word(std::move(letters), 2);
}

}  // namespace

Family parse_family(std::string_view name) {
    if (name == "prop1") return Family::Prop1;
    if (name == "multiroot") return Family::Multiroot;
    if (name == "antichain") return Family::Antichain;
    throw DomainError("unknown construction family '" + std::string(name) +
                      "' (expected prop1, multiroot or antichain)");
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Prop1: return "prop1";
        case Family::Multiroot: return "multiroot";
        case Family::Antichain: return "antichain";
    }
    return "?";
}

Word prop1_word(std::uint64_t p) {
    if (!numtheory::is_prime(p)) throw DomainError("prop1_word: parameter must be prime");
    if (2 * p > kMaxConstructedLength) throw DomainError("prop1_word: word too long");
    return aabb_ab_power(p - 2);
}

Word multiroot_word(std::uint64_t n) {
    if (n < 1) throw DomainError("multiroot_word: n must be >= 1");
    std::uint64_t q = 2;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const auto p = numtheory::nth_prime(i);
        if (q > kMaxConstructedLength / p) throw DomainError("multiroot_word: word too long");
        q *= p;
    }
    return aabb_ab_power((q - 4) / 2);
}

Word antichain_word(std::uint64_t n) {
    if (n < 2) throw DomainError("antichain_word: n must be >= 2");
    if (n > kMaxConstructedLength / 2) throw DomainError("antichain_word: word too long");

    std::vector<Letter> letters;
    letters.reserve(2 * n);
    std::uint64_t previous = 0;
    for (const auto t : numtheory::multiples_closure(n)) {
        const auto run = t - previous;
        letters.insert(letters.end(), run, kA);
        letters.insert(letters.end(), run, kB);
        previous = t;
    }
    return Word(std::move(letters), 2);
}

bool is_in_M(WordView w) {
    const auto letters = w.letters;
    if (letters.size() < 4 || letters.size() % 2 != 0) return false;
    if (letters[0] != kA || letters[1] != kA || letters[2] != kB || letters[3] != kB) return false;
    for (std::size_t i = 4; i < letters.size(); i += 2) {
        if (letters[i] != kA || letters[i + 1] != kB) return false;
    }
    return numtheory::is_prime(letters.size() / 2);
}

Word construct(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::Prop1: return prop1_word(spec.parameter);
        case Family::Multiroot: return multiroot_word(spec.parameter);
        case Family::Antichain: return antichain_word(spec.parameter);
    }
    throw DomainError("construct: unknown family");
}

}  // namespace abelwords
