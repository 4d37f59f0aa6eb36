// fixed_points.hpp -- the words equal to their own iterated closure: the
// approximant sequence, the three nontrivial families, and the verifier

#pragma once

#include <optional>

#include "pseudopal/closure.hpp"

namespace pseudopal {

enum class Family {
    R,        // tau fixes both letters; starts a^n b
    E,        // exchange; starts ab (n forced to 1)
    H,        // hybrid over three letters; starts a^n b
    Trivial,  // a^w under any tau fixing a
};

/// Which self-directed word to build: the family, the block exponent n,
/// and the alphabet whose letters play the roles a, b(, c).
class FamilyDescriptor {
public:
    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::string name() const;

private:
    friend FamilyDescriptor make_family(Family, int, AlphabetPtr);
    FamilyDescriptor() = default;
    Family family_{};
    int n_ = 1;
    AlphabetPtr alphabet_;
};

/// Validates alphabet size (2 for R/E, 3 for H, >=1 for Trivial) and n
/// (>= 1; the E family exists only for n = 1 and rejects anything else).
FamilyDescriptor make_family(Family family, int n, AlphabetPtr alphabet);

/// The antimorphism under which the family's word is a fixed point.
Antimorphism family_antimorphism(const FamilyDescriptor& desc);

/// The forced first letters of the fixed point: a^n b when tau fixes a,
/// the single letter a when tau exchanges a and b.
/// Not defined for the trivial family.
Word family_seed(const FamilyDescriptor& desc);

/// k-th term of the approximant sequence: u_1 = seed,
/// u_k = Pal_V(u_{k-1}). Each term is a prefix of the next.
/// Throws std::domain_error for the trivial family or k < 1.
Word closure_approximant(const FamilyDescriptor& desc, int k);

/// A stream generating the family's fixed point by feeding the closure
/// its own output (the trivial family streams from the directive a^w).
PrefixStream family_stream(const FamilyDescriptor& desc, bool verify = false);

/// The length-m prefix of the fixed point. Idempotent across calls.
Word fixed_point_prefix(const FamilyDescriptor& desc, std::size_t m);

struct FixedPointReport {
    bool is_consistent;
    std::size_t checked_length;
    /// 1-based position of the first disagreement, when inconsistent.
    std::optional<std::size_t> first_mismatch;
};

/// Feeds `w` to the closure stream as its own directive prefix and
/// compares the generated word with `w` position by position, up to
/// min(|w|, generated length).
FixedPointReport verify_fixed_point(const Word& w, const Antimorphism& v);

/// The length-m prefix of the classical iterated closure (tau = id)
/// driven by the family's fixed point as directive. Defined for the E and
/// H families only; satisfies mu_V(companion) = fixed point.
Word companion_word(const FamilyDescriptor& desc, std::size_t m);

}  // namespace pseudopal
