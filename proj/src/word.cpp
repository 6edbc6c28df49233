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

#include "abelwords/word.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "abelwords/error.hpp"

namespace abelwords {

Word::Word(std::vector<Letter> letters, std::size_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0 || alphabet_size_ > kMaxAlphabetSize) {
        throw DomainError("alphabet size must be in [1, 256]");
    }
    if (letters_.size() > std::numeric_limits<Count>::max()) {
        throw DomainError("word length exceeds the 32-bit count range");
    }
    for (const auto letter : letters_) {
        if (letter >= alphabet_size_) throw DomainError("letter outside the alphabet");
    }
}

Word Word::from_string(std::string_view text, std::optional<std::size_t> alphabet_size) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    std::size_t inferred = 1;
    for (const char ch : text) {
        if (ch < 'a' || ch > 'z') {
            throw DomainError(std::string("invalid letter '") + ch + "': words use a..z");
        }
        const auto letter = static_cast<Letter>(ch - 'a');
        inferred = std::max<std::size_t>(inferred, letter + 1u);
        letters.push_back(letter);
    }
    const std::size_t k = alphabet_size.value_or(inferred);
    if (k > 26) throw DomainError("textual words are limited to 26 letters");
    return Word(std::move(letters), k);
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (const auto letter : letters_) {
        if (letter >= 26) throw DomainError("letter has no a..z rendering");
        out.push_back(static_cast<char>('a' + letter));
    }
    return out;
}

Word Word::prefix(std::size_t length) const { return subword(0, length); }

Word Word::subword(std::size_t offset, std::size_t length) const {
    if (offset > letters_.size() || length > letters_.size() - offset) {
        throw DomainError("subword range out of bounds");
    }
    const auto first = letters_.begin() + static_cast<std::ptrdiff_t>(offset);
    return Word({first, first + static_cast<std::ptrdiff_t>(length)}, alphabet_size_);
}

Word concat(const Word& lhs, const Word& rhs) {
    std::vector<Letter> letters(lhs.letters().begin(), lhs.letters().end());
    letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
    return Word(std::move(letters), std::max(lhs.alphabet_size(), rhs.alphabet_size()));
}

std::uint64_t ParikhVector::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto c : counts) sum += c;
    return sum;
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& other) {
    if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
    for (std::size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
    return *this;
}

ParikhVector parikh(WordView w) { return parikh(w, w.alphabet_size); }

ParikhVector parikh(WordView w, std::size_t alphabet_size) {
    if (alphabet_size < w.alphabet_size) {
        throw DomainError("parikh: alphabet narrower than the word's");
    }
    ParikhVector v(alphabet_size);
    for (const auto letter : w.letters) ++v.counts[letter];
    return v;
}

namespace {

void require_block_length(WordView w, std::size_t d) {
    if (d == 0 || w.size() % d != 0) {
        throw DomainError("block length must be a positive divisor of the word length");
    }
}

}  // namespace

std::vector<ParikhVector> block_parikhs(WordView w, std::size_t d) {
    require_block_length(w, d);
    std::vector<ParikhVector> out;
    out.reserve(w.size() / d);
    for (std::size_t offset = 0; offset < w.size(); offset += d) {
        out.push_back(parikh(w.subword(offset, d)));
    }
    return out;
}

bool has_a_root_of_length(WordView w, std::size_t d) {
    require_block_length(w, d);
    if (w.empty()) throw DomainError("has_a_root_of_length: empty word");
    const auto first = parikh(w.subword(0, d));
    for (std::size_t offset = d; offset < w.size(); offset += d) {
        if (parikh(w.subword(offset, d)) != first) return false;
    }
    return true;
}

}  // namespace abelwords
