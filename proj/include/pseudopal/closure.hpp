// closure.hpp -- longest pseudopalindromic suffixes, pseudopalindromic
// closure, the iterated closure Pal_V, and streaming prefix generation

#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "pseudopal/antimorphism.hpp"
#include "pseudopal/words.hpp"

namespace pseudopal {

/// Online index of the pseudopalindromic suffixes of a growing buffer: a
/// palindromic tree (eertree) whose extension test is twisted by tau.
///
/// A word d X c with X a V-palindrome is itself a V-palindrome exactly when
/// d = tau(c), so the classical "same letter on both sides" test becomes a
/// tau-paired test. Both classical roots are kept (lengths -1 and 0); for a
/// fixed-point-free tau the odd root never produces children, which the
/// walk handles without special casing. Each append creates at most one
/// node, and the suffix-link walk is amortized constant per letter.
class SuffixPalindromeIndex {
public:
    explicit SuffixPalindromeIndex(const Antimorphism& v);

    /// Extends the buffer by one letter and updates the index.
    void append(Letter c);

    /// Length of the longest pseudopalindromic suffix of the buffer;
    /// 0 when no nonempty suffix qualifies (always the answer for the
    /// empty buffer).
    std::size_t longest_suffix_length() const noexcept;

    std::size_t size() const noexcept { return buffer_.size(); }
    const std::vector<Letter>& buffer() const noexcept { return buffer_; }

    /// Number of distinct pseudopalindromic factors seen so far.
    std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 2; }

private:
    static constexpr std::int32_t kNone = -1;
    static constexpr std::int32_t kOddRoot = 0;   // length -1
    static constexpr std::int32_t kEvenRoot = 1;  // length 0

    struct Node {
        std::int32_t len;
        std::int32_t slink;
    };

    std::int32_t child(std::int32_t node, Letter c) const {
        return children_[static_cast<std::size_t>(node) * sigma_ + c];
    }
    void set_child(std::int32_t node, Letter c, std::int32_t target) {
        children_[static_cast<std::size_t>(node) * sigma_ + c] = target;
    }
    std::int32_t new_node(std::int32_t len, std::int32_t slink);

    // First node in the suffix-link chain from `start` whose extension by
    // c (paired with tau(c) on the left) stays inside the buffer; kNone
    // when even the odd root fails.
    std::int32_t find_extensible(std::int32_t start, Letter c) const;

    std::size_t sigma_;
    std::array<Letter, kMaxAlphabetSize> tau_{};
    std::vector<Letter> buffer_;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> children_;  // nodes_.size() * sigma_, flat
    std::int32_t last_;  // node of the longest pseudopalindromic suffix
};

/// Length of the longest pseudopalindromic suffix of `w` (incremental index).
std::size_t longest_pseudopalindromic_suffix(const Word& w, const Antimorphism& v);

/// Same answer by a quadratic scan over all suffixes. Retained in the
/// library as the self-check oracle for the incremental index.
std::size_t longest_pseudopalindromic_suffix_naive(const Word& w,
                                                   const Antimorphism& v);

/// The shortest V-palindrome having `w` as a prefix: w = s q with q the
/// longest V-palindromic suffix, result s q V(s). Length 2|w| - |q|.
Word pseudopalindromic_closure(const Word& w, const Antimorphism& v);

/// Iterated closure Pal_V: Pal_V(empty) = empty,
/// Pal_V(wa) = closure(Pal_V(w) a). Pal_V(u) is a prefix of Pal_V(uv).
Word iterated_closure(const Word& w, const Antimorphism& v);

/// Source of directive letters for streaming generation.
struct DirectiveSpec {
    enum class Kind {
        Finite,              // exactly the letters of `head`
        EventuallyPeriodic,  // head, then cycle repeated forever
        SelfDirected,        // the generated word itself, seeded by `head`
    };

    static DirectiveSpec finite(Word w);
    /// u v^w; `v` must be nonempty.
    static DirectiveSpec eventually_periodic(Word u, Word v);
    /// Directive letters are read back from the generated buffer once it
    /// outgrows the seed. The seed must be a known prefix of the limit.
    static DirectiveSpec self_directed(Word seed);

    const AlphabetPtr& alphabet() const { return head.alphabet(); }
    bool is_infinite() const { return kind != Kind::Finite; }

    Kind kind;
    Word head;
    Word cycle;
};

/// Parses the textual grammar: finite "abcab" or eventually periodic
/// "ab(ba)^w" (u = "ab", v = "ba"; u may be empty).
DirectiveSpec parse_directive(AlphabetPtr alphabet, std::string_view text);

/// Stateful generator of ever-longer prefixes of IPal_V(directive).
/// Single-owner; distinct streams are independent.
class PrefixStream {
public:
    /// With `verify` set, every closure step cross-checks the incremental
    /// index against the naive suffix scan (quadratic; for self-checks).
    PrefixStream(Antimorphism v, DirectiveSpec directive, bool verify = false);

    struct Result {
        Word prefix;
        /// True when a finite directive ran out before reaching the
        /// requested length; `prefix` then holds the full closure value.
        bool exhausted;
    };

    /// Grows the buffer until it holds at least m letters (or the finite
    /// directive is exhausted) and returns the length-m prefix. The
    /// untruncated buffer is retained for later requests.
    Result request(std::size_t m);

    /// Extends generation; stops as soon as the buffer reaches m letters.
    void generate_to(std::size_t m);

    std::size_t generated_length() const noexcept { return index_.size(); }
    const std::vector<Letter>& buffer() const noexcept { return index_.buffer(); }
    std::size_t directive_consumed() const noexcept { return consumed_; }
    bool directive_exhausted() const noexcept;
    const Antimorphism& antimorphism() const noexcept { return v_; }

    /// Snapshot of the first min(m, generated) letters as a Word.
    Word prefix_word(std::size_t m) const;

private:
    void step();  // consume one directive letter and close

    Antimorphism v_;
    DirectiveSpec directive_;
    SuffixPalindromeIndex index_;
    std::size_t consumed_ = 0;
    bool verify_;
};

}  // namespace pseudopal
