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

#include "abelwords/roots.hpp"

#include "abelwords/error.hpp"
#include "abelwords/numtheory.hpp"
#include "abelwords/primitivity.hpp"

namespace abelwords {

RootProfile root_profile(WordView w) {
    if (w.size() < 2) throw DomainError("root_profile: an Abelian power has length >= 2");

    RootProfile profile;
    profile.word_length = w.size();
    for (const auto d : numtheory::divisors(w.size())) {
        if (d == w.size()) break;
        if (!has_a_root_of_length(w, d)) continue;
        profile.a_root_lengths.push_back(d);
        if (is_a_primitive_linear(w.subword(0, d)).is_a_primitive) {
            profile.a_primitive_root_lengths.push_back(d);
        }
    }
    return profile;
}

std::vector<Word> a_primitive_roots(const Word& w) {
    std::vector<Word> roots;
    for (const auto d : root_profile(w).a_primitive_root_lengths) roots.push_back(w.prefix(d));
    return roots;
}

std::size_t count_distinct_a_primitive_roots(WordView w) {
    return root_profile(w).a_primitive_root_lengths.size();
}

}  // namespace abelwords
