// antimorphism.hpp -- involutory antimorphisms V = R.tau, pseudopalindromes,
// and the letter-pairing morphism mu_V

#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>

#include "pseudopal/words.hpp"

namespace pseudopal {

/// An involutory antimorphism V = R.tau: reversal composed with an
/// involutive letter permutation tau. Immutable; all operations are pure.
class Antimorphism {
public:
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    Letter tau(Letter a) const { return tau_[a]; }
    bool fixes(Letter a) const { return tau_[a] == a; }
    bool is_identity_tau() const noexcept;

    /// Pair notation, e.g. "a:a,b:c,c:b".
    std::string describe() const;

private:
    friend Antimorphism make_antimorphism(AlphabetPtr,
                                          std::span<const Letter> table);
    Antimorphism() = default;
    AlphabetPtr alphabet_;
    std::array<Letter, kMaxAlphabetSize> tau_{};
};

/// Validates that `table` is an involutive permutation of the alphabet.
/// Throws std::invalid_argument naming the offending letter otherwise.
Antimorphism make_antimorphism(AlphabetPtr alphabet,
                               std::span<const Letter> table);

/// tau from explicit letter pairs; letters not mentioned are fixed.
Antimorphism make_antimorphism(
    AlphabetPtr alphabet, std::span<const std::pair<Letter, Letter>> pairs);

/// Parses the CLI pair notation "a:b,b:a"; singletons a:a may be omitted.
Antimorphism parse_antimorphism(AlphabetPtr alphabet, std::string_view spec);

/// Plain reversal (tau = id) over any alphabet.
Antimorphism reversal_antimorphism(AlphabetPtr alphabet);

/// The exchange antimorphism E over "ab": tau(a)=b, tau(b)=a.
Antimorphism exchange_antimorphism();

/// The hybrid antimorphism H over "abc": tau(a)=a, tau(b)=c, tau(c)=b.
Antimorphism hybrid_antimorphism();

/// V(w): reversal of the letterwise tau-image. Satisfies
/// apply(V, uv) == apply(V, v) + apply(V, u) and apply(V, apply(V, w)) == w.
Word apply(const Antimorphism& v, const Word& w);

/// True iff apply(v, w) == w.
bool is_pseudopalindrome(const Antimorphism& v, const Word& w);

/// The morphism mu_V: a -> a when tau fixes a, a -> a tau(a) otherwise.
/// For the exchange antimorphism this is the Thue-Morse morphism.
Word mu_morphism(const Antimorphism& v, const Word& w);

}  // namespace pseudopal
