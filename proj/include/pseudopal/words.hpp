// words.hpp -- alphabets, finite words, and elementary word operations

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pseudopal {

/// Letters are small indices into an Alphabet; rendering to characters
/// happens only at I/O boundaries.
using Letter = std::uint8_t;

/// Largest supported alphabet. The constructions used here need at most
/// three letters; the cap leaves headroom for custom antimorphisms.
inline constexpr std::size_t kMaxAlphabetSize = 16;

/// An ordered set of distinct printable symbols.
class Alphabet {
public:
    /// Throws std::invalid_argument unless `symbols` is 1..16 distinct
    /// printable characters.
    explicit Alphabet(std::string symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(Letter i) const;
    const std::string& symbols() const noexcept { return symbols_; }

    /// Index of `c`, or nullopt when `c` is not in the alphabet.
    std::optional<Letter> index_of(char c) const noexcept;

    /// Index of `c`; throws std::domain_error when absent.
    Letter letter(char c) const;

    bool contains(Letter i) const noexcept { return i < symbols_.size(); }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string symbols);

/// A finite word over one Alphabet. Immutable after construction; cheap to
/// copy and safe to share across threads.
class Word {
public:
    /// Throws std::domain_error when a letter index is outside the alphabet.
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    /// Empty word over `alphabet`.
    explicit Word(AlphabetPtr alphabet) : Word(std::move(alphabet), {}) {}

    /// Decodes a character string; throws std::domain_error on characters
    /// outside the alphabet.
    static Word from_string(AlphabetPtr alphabet, std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

    std::string str() const;

    /// Concatenation; both operands must share one alphabet.
    Word operator+(const Word& rhs) const;

    /// Equal iff the alphabets agree (by content) and the letters agree.
    bool operator==(const Word& rhs) const;

    /// Lexicographic order on letters, then on length.
    std::strong_ordering operator<=>(const Word& rhs) const;

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

/// A maximal block of one repeated letter.
struct Run {
    Letter letter;
    std::size_t count;  // >= 1
    bool operator==(const Run&) const = default;
};

/// Number of occurrences of letter `a` in `w`.
/// Throws std::domain_error when `a` is outside w's alphabet.
std::size_t count_letter(const Word& w, Letter a);

/// `w` read backwards. An involution: reversal(reversal(w)) == w.
Word reversal(const Word& w);

/// Maximal runs of `w`, in order. Adjacent runs carry distinct letters.
std::vector<Run> run_length_encode(const Word& w);

/// Rebuilds the word a ^ c1 b ^ c2 ... from its runs.
Word run_length_decode(AlphabetPtr alphabet, std::span<const Run> runs);

/// All distinct length-n factors of `w`, sorted; empty when n > |w|.
/// Throws std::domain_error for n = 0 (the empty factor is excluded).
std::vector<Word> factors_of_length(const Word& w, std::size_t n);

}  // namespace pseudopal
