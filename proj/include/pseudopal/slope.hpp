// slope.hpp -- directive run-lengths to slope continued fractions, exact
// convergents, and the Sturm-number form test

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pseudopal/words.hpp"

namespace pseudopal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with reduced terms and positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    int sign() const noexcept;
    std::string str() const;  // "p/q"

private:
    BigInt num_;
    BigInt den_;
};

/// Simple continued fraction [a0; a1, a2, ...] with a0 = 0 and all later
/// quotients >= 1, optionally with a declared periodic tail, optionally
/// with a provisional final quotient (finite-prefix truncation artifact).
struct ContinuedFraction {
    std::vector<std::int64_t> quotients;
    std::optional<std::vector<std::int64_t>> periodic_tail;
    bool last_provisional = false;
};

/// Validates the invariants above.
ContinuedFraction make_cf(std::vector<std::int64_t> quotients,
                          std::optional<std::vector<std::int64_t>> periodic_tail =
                              std::nullopt);

/// Quotient at index i, unrolling the periodic tail when present.
std::int64_t cf_quotient(const ContinuedFraction& cf, std::size_t i);

/// Number of explicit quotients, or SIZE_MAX with a periodic tail.
std::size_t cf_available(const ContinuedFraction& cf);

/// Slope continued fraction of a binary directive prefix: runs
/// a^d1 b^d2 a^d3 ... give [0; 1+d1, d2, d3, ...]. The final quotient is
/// marked provisional (the next directive letter could extend the run).
/// The directive must start with the alphabet's first letter; b-first
/// words are rejected with advice to swap letters first.
ContinuedFraction directive_to_cf(const Word& w);

/// Swaps the two letters of a binary word (the documented transform for
/// analyzing b-first directives; the slope maps to 1 - alpha).
Word swap_binary_letters(const Word& w);

/// k-th convergent p_k/q_k by the standard recurrence.
/// Throws std::out_of_range when k quotients are not available.
Rational cf_convergent(const ContinuedFraction& cf, std::size_t k);

/// Raised by checks that presuppose an eventually periodic expansion.
class not_applicable_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// True iff the expansion matches one of the two Sturm-number forms:
///   [0; 1, a0, (a1..ak)^w] with ak >= a0, or
///   [0; 1+a0, (a1..ak)^w]  with ak >= a0 >= 1.
/// The declared presentation and its cyclic shifts are tested (the period
/// is re-anchored as early as possible, which subsumes all rotations of
/// the declared block). Throws not_applicable_error without a tail.
bool is_sturm_number(const ContinuedFraction& cf);

/// Largest partial quotient at index >= 1; the provisional final quotient
/// is excluded unless requested. Periodic tails are included.
std::int64_t quotient_bound(const ContinuedFraction& cf,
                            bool include_provisional = false);

}  // namespace pseudopal
