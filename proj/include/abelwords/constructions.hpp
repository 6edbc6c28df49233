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
#include <string_view>

#include "abelwords/word.hpp"

namespace abelwords {

enum class Family { Prop1, Multiroot, Antichain };

struct ConstructionSpec {
    Family family = Family::Prop1;
    std::uint64_t parameter = 2;
};

/// Parses "prop1", "multiroot" or "antichain".
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// aabb(ab)^(p-2) for a prime p; length 2p and A-primitive.
Word prop1_word(std::uint64_t p);

/// aabb(ab)^((Q_n - 4)/2) with Q_n = 2 * p_1 * ... * p_n. For n >= 2 the
/// prefixes aabb(ab)^(p_m - 2), 1 <= m <= n, are distinct A-primitive roots.
Word multiroot_word(std::uint64_t n);

/// Word of length 2n, Parikh vector (n, n), with an A-primitive root of
/// length 2t for every t in the middle antichain of n. Built from the sorted
/// multiples t_1 < ... < t_m = n as a^t1 b^t1 followed by
/// a^(t_i - t_{i-1}) b^(t_i - t_{i-1}) for i >= 2.
Word antichain_word(std::uint64_t n);

/// Membership in {aabb(ab)^(p-2) : p prime}.
bool is_in_M(WordView w);

Word construct(const ConstructionSpec& spec);

}  // namespace abelwords
