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
#include <vector>

#include "abelwords/word.hpp"

namespace abelwords {

/// Abelian-root lengths of a word, restricted to proper divisors of its length.
struct RootProfile {
    std::size_t word_length = 0;
    /// Proper divisors d < n such that w is an (n/d)-th Abelian power.
    std::vector<std::size_t> a_root_lengths;
    /// Those d whose length-d prefix is itself A-primitive.
    std::vector<std::size_t> a_primitive_root_lengths;

    friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

/// Requires |w| >= 2. An A-primitive word yields empty lists.
RootProfile root_profile(WordView w);

/// The A-primitive roots themselves, shortest first.
std::vector<Word> a_primitive_roots(const Word& w);

std::size_t count_distinct_a_primitive_roots(WordView w);

}  // namespace abelwords
