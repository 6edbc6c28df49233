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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelwords {

using Letter = std::uint8_t;
using Count = std::uint32_t;

inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Non-owning view of a word: letter indices in [0, alphabet_size).
struct WordView {
    std::span<const Letter> letters;
    std::size_t alphabet_size = 1;

    [[nodiscard]] std::size_t size() const noexcept { return letters.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters.empty(); }
    [[nodiscard]] WordView subword(std::size_t offset, std::size_t length) const {
        return {letters.subspan(offset, length), alphabet_size};
    }
};

/// A finite word over an ordered alphabet of `alphabet_size` letters.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters, std::size_t alphabet_size);

    /// Parses a string over a..z. Without `alphabet_size` the alphabet is
    /// inferred from the largest letter present (at least one letter).
    static Word from_string(std::string_view text,
                            std::optional<std::size_t> alphabet_size = std::nullopt);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
    [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }

    [[nodiscard]] WordView view() const noexcept { return {letters_, alphabet_size_}; }
    operator WordView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

    [[nodiscard]] Word prefix(std::size_t length) const;
    [[nodiscard]] Word subword(std::size_t offset, std::size_t length) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
    std::size_t alphabet_size_ = 1;
};

Word concat(const Word& lhs, const Word& rhs);

/// Letter-occurrence counts of a word, one entry per alphabet letter.
struct ParikhVector {
    std::vector<Count> counts;

    ParikhVector() = default;
    explicit ParikhVector(std::size_t alphabet_size) : counts(alphabet_size, 0) {}
    explicit ParikhVector(std::vector<Count> values) : counts(std::move(values)) {}

    [[nodiscard]] std::size_t size() const noexcept { return counts.size(); }
    [[nodiscard]] Count operator[](std::size_t i) const { return counts[i]; }
    [[nodiscard]] std::uint64_t total() const noexcept;

    ParikhVector& operator+=(const ParikhVector& other);
    friend ParikhVector operator+(ParikhVector lhs, const ParikhVector& rhs) { return lhs += rhs; }
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh(WordView w);

/// Parikh vector over a (possibly wider) alphabet of `alphabet_size` letters.
ParikhVector parikh(WordView w, std::size_t alphabet_size);

/// Parikh vectors of the |w|/d consecutive length-d blocks of w.
std::vector<ParikhVector> block_parikhs(WordView w, std::size_t d);

/// True iff every length-d block of w has the same Parikh vector.
/// d == |w| is the single-block case and always holds.
bool has_a_root_of_length(WordView w, std::size_t d);

}  // namespace abelwords
