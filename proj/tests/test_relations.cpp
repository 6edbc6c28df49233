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

#include "doctest.h"

#include "abelwords/error.hpp"
#include "abelwords/relations.hpp"
#include "abelwords/roots.hpp"
#include "support.hpp"

using namespace abelwords;
using abelwords::testing::W;

namespace {

std::vector<std::string> render(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.to_string());
    return out;
}

// Every binary word of length 1..max_len.
std::vector<Word> binary_words(std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        abelwords::testing::all_words(2, n, [&](const std::vector<Letter>& l) { out.emplace_back(l, 2); });
    }
    return out;
}

}  // namespace

TEST_CASE("sim_n") {
    CHECK(sim_n(W("abcacbabc"), W("cbabcabca"), 3));
    CHECK(sim_n(W("abab"), W("abab"), 2));
    CHECK_FALSE(sim_n(W("abaa"), W("baaa"), 2));
    CHECK_THROWS_AS(sim_n(W("ab"), W("abc"), 1), DomainError);
    CHECK_THROWS_AS(sim_n(W("abc"), W("abc"), 2), DomainError);
}

TEST_CASE("simeq_n") {
    CHECK(simeq_n(W("abaa"), W("baaa"), 2));
    CHECK(simeq_n(W("abcacbabc"), W("cbabcabca"), 3));
    CHECK_FALSE(simeq_n(W("ab"), W("aa"), 2));
}

TEST_CASE("commute_check builds the witness for the cbabc / abca pair") {
    const auto u = W("cbabc");
    const auto x = W("abca");
    const auto witness = commute_check(u, x, 3);
    REQUIRE(witness);
    CHECK(witness->r == 3);
    CHECK(witness->s == 2);
    CHECK(render(witness->alphas) == std::vector<std::string>{"cb", "bc", "bc"});
    CHECK(render(witness->betas) == std::vector<std::string>{"a", "a", "a"});
    CHECK(witness_violation(u, x, 3, *witness).empty());
}

TEST_CASE("commute_check edge cases") {
    CHECK(commute_check(W("ab"), W("ab"), 2));
    CHECK_FALSE(commute_check(W("baa"), W("a", 2), 2));
    CHECK_THROWS_AS(commute_check(W("ab"), W("a"), 2), DomainError);
    CHECK_THROWS_AS(commute_check(Word({}, 2), W("ab"), 2), DomainError);

    // Block-aligned boundary: empty alpha parts.
    const auto aligned = commute_check(W("abba"), W("ab"), 2);
    REQUIRE(aligned);
    CHECK(aligned->s == 3);
    CHECK(aligned->alphas[0].empty());
    // |x| < n: s == r.
    const auto short_x = commute_check(W("aba"), W("b"), 2);
    REQUIRE(short_x);
    CHECK(short_x->s == short_x->r);
}

TEST_CASE("witness_violation rejects tampered witnesses") {
    const auto u = W("cbabc");
    const auto x = W("abca");
    auto witness = *commute_check(u, x, 3);
    auto swapped = witness;
    std::swap(swapped.alphas[0], swapped.alphas[1]);
    CHECK_FALSE(witness_violation(u, x, 3, swapped).empty());
    auto wrong_s = witness;
    wrong_s.s = 1;
    CHECK_FALSE(witness_violation(u, x, 3, wrong_s).empty());
    auto wrong_len = witness;
    wrong_len.betas[2] = W("ab");
    CHECK_FALSE(witness_violation(u, x, 3, wrong_len).empty());
}

TEST_CASE("commute_check yields a valid witness exactly when ux ~_n xu (|u|+|x| <= 10)") {
    const auto words = binary_words(9);
    for (const auto& u : words) {
        for (const auto& x : words) {
            const std::size_t total = u.size() + x.size();
            if (total > 10) continue;
            for (std::size_t n = 1; n <= total; ++n) {
                if (total % n != 0) continue;
                const auto witness = commute_check(u, x, n);
                REQUIRE(witness.has_value() == sim_n(concat(u, x), concat(x, u), n));
                if (witness) REQUIRE(witness_violation(u, x, n, *witness).empty());
            }
        }
    }
}

TEST_CASE("sim_n is an equivalence relation and implies simeq_n") {
    std::mt19937_64 rng(abelwords::testing::kSeed + 30);
    MESSAGE("seed " << abelwords::testing::kSeed + 30);
    // Words from one of two Parikh classes so related pairs are common.
    auto sample = [&](std::size_t blocks) {
        std::vector<Letter> letters;
        const std::vector<Letter> base = (rng() % 2) ? std::vector<Letter>{0, 0, 1} : std::vector<Letter>{0, 1, 1};
        for (std::size_t b = 0; b < blocks; ++b) {
            auto copy = base;
            std::shuffle(copy.begin(), copy.end(), rng);
            letters.insert(letters.end(), copy.begin(), copy.end());
        }
        if (rng() % 4 == 0) letters[rng() % letters.size()] ^= 1;
        return Word(letters, 2);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = sample(3);
        const auto b = sample(3);
        const auto c = sample(3);
        REQUIRE(sim_n(a, a, 3) == has_a_root_of_length(a, 3));
        REQUIRE(sim_n(a, b, 3) == sim_n(b, a, 3));
        if (sim_n(a, b, 3) && sim_n(b, c, 3)) REQUIRE(sim_n(a, c, 3));
        if (sim_n(a, b, 3)) REQUIRE(simeq_n(a, b, 3));
    }
    CHECK(simeq_n(W("abaa"), W("baaa"), 2));
    CHECK_FALSE(sim_n(W("abaa"), W("baaa"), 2));
}

TEST_CASE("shared_root_check") {
    const auto shared = shared_root_check(W("abab"), W("baba"), 2);
    REQUIRE(shared);
    CHECK(shared->to_string() == "ba");
    CHECK(parikh(*shared) == parikh(W("ab")));

    CHECK(shared_root_check(W("aa"), W("aa"), 1)->to_string() == "a");
    CHECK_THROWS_AS(shared_root_check(W("cbabc"), W("abca"), 3), DomainError);
    CHECK_THROWS_AS(shared_root_check(W("abab"), W("aaaa"), 2), DomainError);
    // Prefix of u is an A-root but not A-primitive.
    CHECK_FALSE(shared_root_check(W("abababab"), W("abab"), 4));
    // The shared root of x need not itself be A-primitive.
    CHECK(shared_root_check(W("aabbaabb"), W("abab"), 4)->to_string() == "abab");
}

TEST_CASE("shared roots: x has an A-root of length n with u's Parikh vector") {
    const auto words = binary_words(8);
    for (const auto& u : words) {
        for (const auto& x : words) {
            for (std::size_t n = 1; n <= std::min(u.size(), x.size()); ++n) {
                if (u.size() % n != 0 || x.size() % n != 0) continue;
                if (!commute_check(u, x, n)) continue;
                const auto root = shared_root_check(u, x, n);
                const bool u_has_primitive_root =
                    n < u.size() && [&] {
                        const auto p = root_profile(u).a_primitive_root_lengths;
                        return std::binary_search(p.begin(), p.end(), n);
                    }();
                REQUIRE(root.has_value() == u_has_primitive_root);
                if (!root) continue;
                REQUIRE(has_a_root_of_length(x, n));
                REQUIRE(parikh(*root) == parikh(u.prefix(n)));
            }
        }
    }
}
