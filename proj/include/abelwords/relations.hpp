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
#include <string>
#include <vector>

#include "abelwords/word.hpp"

namespace abelwords {

/// Factorization u = a_1 b_1 ... a_{s-1} b_{s-1} a_s and
/// x = b_s a_{s+1} b_{s+1} ... a_r b_r with |a_i b_i| = n, all a_i sharing
/// one Parikh vector and all b_i sharing another.
///
/// When n divides |u| every a_i is empty. s == r happens when |x| <= n.
struct CommutationWitness {
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<Word> alphas;
    std::vector<Word> betas;
};

/// u ~_n x: all length-n blocks of u and x share one Parikh vector.
bool sim_n(const Word& u, const Word& x, std::size_t n);

/// Weakened relation: only parallel blocks must agree.
bool simeq_n(const Word& u, const Word& x, std::size_t n);

/// A witness exists iff ux ~_n xu.
std::optional<CommutationWitness> commute_check(const Word& u, const Word& x, std::size_t n);

/// Checks a witness against u, x and n from scratch. Returns an empty string
/// when valid, otherwise the first violated condition.
std::string witness_violation(const Word& u, const Word& x, std::size_t n,
                              const CommutationWitness& witness);

/// When the length-n prefix of u is an A-primitive root of u, returns the
/// length-n prefix of x, whose blocks share that root's Parikh vector.
/// Requires n | |u|, n | |x| and ux ~_n xu.
std::optional<Word> shared_root_check(const Word& u, const Word& x, std::size_t n);

}  // namespace abelwords
