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

#include "abelwords/relations.hpp"

#include <algorithm>

#include "abelwords/error.hpp"
#include "abelwords/primitivity.hpp"
#include "abelwords/roots.hpp"

namespace abelwords {

namespace {

std::size_t common_alphabet(const Word& u, const Word& x) {
    return std::max(u.alphabet_size(), x.alphabet_size());
}

void require_block_pair(const Word& u, const Word& x, std::size_t n) {
    if (u.size() != x.size()) throw DomainError("relation needs words of equal length");
    if (n == 0 || u.size() % n != 0) {
        throw DomainError("block length must be a positive divisor of the word length");
    }
}

std::vector<ParikhVector> blocks(const Word& w, std::size_t n, std::size_t k) {
    std::vector<ParikhVector> out;
    for (std::size_t offset = 0; offset < w.size(); offset += n) {
        out.push_back(parikh(w.view().subword(offset, n), k));
    }
    return out;
}

}  // namespace

bool sim_n(const Word& u, const Word& x, std::size_t n) {
    require_block_pair(u, x, n);
    if (u.empty()) return true;
    const auto k = common_alphabet(u, x);
    const auto target = parikh(u.view().subword(0, n), k);
    for (const auto* w : {&u, &x}) {
        for (const auto& v : blocks(*w, n, k)) {
            if (v != target) return false;
        }
    }
    return true;
}

bool simeq_n(const Word& u, const Word& x, std::size_t n) {
    require_block_pair(u, x, n);
    const auto k = common_alphabet(u, x);
    return blocks(u, n, k) == blocks(x, n, k);
}

std::optional<CommutationWitness> commute_check(const Word& u, const Word& x, std::size_t n) {
    if (u.empty() || x.empty()) throw DomainError("commute_check: u and x must be nonempty");
    const std::size_t total = u.size() + x.size();
    if (n == 0 || total % n != 0) throw DomainError("commute_check: n must divide |u| + |x|");

    if (!sim_n(concat(u, x), concat(x, u), n)) return std::nullopt;

    // Blocks gamma_i of ux; the u/x boundary sits `split` letters into block s.
    // xu is ux rotated by |u|, so its blocks are gamma''_i gamma'_{i+1}.
    const Word ux = concat(u, x);
    const std::size_t split = u.size() % n;

    CommutationWitness witness;
    witness.r = total / n;
    witness.s = u.size() / n + 1;
    for (std::size_t i = 0; i < witness.r; ++i) {
        witness.alphas.push_back(ux.subword(i * n, split));
        witness.betas.push_back(ux.subword(i * n + split, n - split));
    }

    if (auto problem = witness_violation(u, x, n, witness); !problem.empty()) {
        throw InternalError("commute_check: constructed witness is invalid: " + problem);
    }
    return witness;
}

std::string witness_violation(const Word& u, const Word& x, std::size_t n,
                              const CommutationWitness& witness) {
    const auto& alphas = witness.alphas;
    const auto& betas = witness.betas;
    if (witness.r < 1 || alphas.size() != witness.r || betas.size() != witness.r) {
        return "r must be >= 1 and match the number of parts";
    }
    if (witness.s < 1 || witness.s > witness.r) return "s must lie in [1, r]";

    const auto k = common_alphabet(u, x);
    for (std::size_t i = 0; i < witness.r; ++i) {
        if (alphas[i].size() + betas[i].size() != n) return "(a) |alpha_i beta_i| != n";
        if (parikh(alphas[i], k) != parikh(alphas[0], k)) return "(b) alpha Parikh vectors differ";
        if (parikh(betas[i], k) != parikh(betas[0], k)) return "(b) beta Parikh vectors differ";
    }

    std::vector<Letter> rebuilt_u;
    for (std::size_t i = 0; i + 1 < witness.s; ++i) {
        rebuilt_u.insert(rebuilt_u.end(), alphas[i].letters().begin(), alphas[i].letters().end());
        rebuilt_u.insert(rebuilt_u.end(), betas[i].letters().begin(), betas[i].letters().end());
    }
    const auto& last = alphas[witness.s - 1];
    rebuilt_u.insert(rebuilt_u.end(), last.letters().begin(), last.letters().end());

    std::vector<Letter> rebuilt_x(betas[witness.s - 1].letters().begin(),
                                  betas[witness.s - 1].letters().end());
    for (std::size_t i = witness.s; i < witness.r; ++i) {
        rebuilt_x.insert(rebuilt_x.end(), alphas[i].letters().begin(), alphas[i].letters().end());
        rebuilt_x.insert(rebuilt_x.end(), betas[i].letters().begin(), betas[i].letters().end());
    }

    if (!std::ranges::equal(rebuilt_u, u.letters())) return "(c) factors do not reassemble u";
    if (!std::ranges::equal(rebuilt_x, x.letters())) return "(c) factors do not reassemble x";
    return {};
}

std::optional<Word> shared_root_check(const Word& u, const Word& x, std::size_t n) {
    if (u.empty() || x.empty()) throw DomainError("shared_root_check: u and x must be nonempty");
    if (n == 0 || u.size() % n != 0 || x.size() % n != 0) {
        throw DomainError("shared_root_check: n must divide both |u| and |x|");
    }
    if (!commute_check(u, x, n)) throw DomainError("shared_root_check: ux and xu do not commute under ~_n");

    if (n == u.size()) return std::nullopt;
    const auto profile = root_profile(u);
    if (!std::ranges::binary_search(profile.a_primitive_root_lengths, n)) return std::nullopt;

    const auto k = common_alphabet(u, x);
    const auto target = parikh(u.view().subword(0, n), k);
    for (const auto& v : blocks(x, n, k)) {
        if (v != target) throw InternalError("shared_root_check: x block disagrees with u's root");
    }
    return x.prefix(n);
}

}  // namespace abelwords
