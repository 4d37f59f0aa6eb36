// analysis.hpp -- empirical analyzers over finite prefixes: powers,
// balance, factor complexity, frequencies, periodicity, palindromic prefixes

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pseudopal/slope.hpp"
#include "pseudopal/words.hpp"

namespace pseudopal {

/// An occurrence of base^exponent starting at `position`.
struct PowerWitness {
    Word base;
    std::size_t position;
    int exponent;
};

/// True iff base^exponent really occurs in w at witness.position.
bool verify_power_witness(const Word& w, const PowerWitness& witness);

struct PowerReport {
    int max_power;
    std::optional<PowerWitness> witness;
    std::size_t searched_length;
};

/// Largest k such that some nonempty u with u^k a factor of w exists,
/// exhaustive over all periods. Throws std::domain_error on empty input.
PowerReport max_integer_power(const Word& w);

struct PowerFreeReport {
    bool is_free;
    std::optional<PowerWitness> witness;  // set when not free
};

/// k-power-freeness with a witness when violated. k < 2 is a domain error.
PowerFreeReport is_k_power_free(const Word& w, int k);

struct BalanceWitness {
    Word factor_hi;  // the window with more occurrences
    Word factor_lo;
    Letter letter;
};

struct BalanceReport {
    bool balanced;
    std::optional<BalanceWitness> witness;
};

/// Balanced iff for every window length and every letter, the letter
/// counts of equal-length factors differ by at most 1.
BalanceReport is_balanced(const Word& w);

/// Number of distinct length-n factors. Requires 1 <= n <= |w|.
std::size_t factor_complexity(const Word& w, std::size_t n);

/// Exact occurrence frequencies per alphabet letter; they sum to 1.
/// Throws std::domain_error on empty input.
std::map<Letter, Rational> letter_frequencies(const Word& w);

struct UltimatePeriod {
    std::size_t preperiod;
    std::size_t period;
};

/// Smallest (preperiod, period) in lexicographic order such that
/// w[i] = w[i+period] for all i >= preperiod, demanding at least three
/// full periods of evidence. Finite-prefix evidence only: this can never
/// prove periodicity of an infinite word. Requires |w| >= 4.
std::optional<UltimatePeriod> detect_ultimate_period(const Word& w);

/// All L >= 1 such that the length-L prefix is a palindrome, ascending.
std::vector<std::size_t> palindromic_prefixes(const Word& w);
std::vector<std::size_t> palindromic_prefixes(std::span<const std::int64_t> seq);

}  // namespace pseudopal
