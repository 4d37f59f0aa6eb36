#include "pseudopal/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace pseudopal {

bool verify_power_witness(const Word& w, const PowerWitness& witness) {
    const std::size_t p = witness.base.size();
    if (p == 0 || witness.exponent < 1) return false;
    const std::size_t total = p * static_cast<std::size_t>(witness.exponent);
    if (witness.position + total > w.size()) return false;
    for (std::size_t i = 0; i < total; ++i) {
        if (w[witness.position + i] != witness.base[i % p]) return false;
    }
    return true;
}

namespace {

Word subword(const Word& w, std::size_t pos, std::size_t len) {
    return Word(w.alphabet(),
                std::vector<Letter>(w.letters().begin() + pos,
                                    w.letters().begin() + pos + len));
}

}  // namespace

PowerReport max_integer_power(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::domain_error("power search over the empty word");
    const auto s = w.letters();

    int best = 1;
    PowerWitness witness{subword(w, 0, 1), 0, 1};
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t streak = 0;  // consecutive i with s[i] == s[i+p]
        for (std::size_t i = 0; i + p < n; ++i) {
            if (s[i] == s[i + p]) {
                ++streak;
                const int k = static_cast<int>((streak + p) / p);
                if (k > best) {
                    const std::size_t start = i + 1 - streak;
                    best = k;
                    witness = {subword(w, start, p), start, k};
                }
            } else {
                streak = 0;
            }
        }
    }
    assert(verify_power_witness(w, witness));
    return {best, witness, n};
}

PowerFreeReport is_k_power_free(const Word& w, int k) {
    if (k < 2) throw std::domain_error("power-freeness is defined for k >= 2");
    if (w.empty()) throw std::domain_error("power search over the empty word");
    const std::size_t n = w.size();
    const auto s = w.letters();

    for (std::size_t p = 1; p * static_cast<std::size_t>(k) <= n; ++p) {
        const std::size_t needed = p * static_cast<std::size_t>(k - 1);
        std::size_t streak = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (s[i] == s[i + p]) {
                if (++streak >= needed) {
                    const std::size_t start = i + 1 - needed;
                    PowerWitness witness{subword(w, start, p), start, k};
                    assert(verify_power_witness(w, witness));
                    return {false, witness};
                }
            } else {
                streak = 0;
            }
        }
    }
    return {true, std::nullopt};
}

BalanceReport is_balanced(const Word& w) {
    const std::size_t n = w.size();
    const auto s = w.letters();
    const std::size_t sigma = w.alphabet()->size();

    for (std::size_t len = 1; len <= n; ++len) {
        for (Letter c = 0; c < sigma; ++c) {
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < len; ++i) cnt += (s[i] == c);
            std::size_t lo = cnt, hi = cnt;
            std::size_t lo_pos = 0, hi_pos = 0;
            for (std::size_t i = 1; i + len <= n; ++i) {
                cnt += (s[i + len - 1] == c);
                cnt -= (s[i - 1] == c);
                if (cnt > hi) { hi = cnt; hi_pos = i; }
                if (cnt < lo) { lo = cnt; lo_pos = i; }
                if (hi - lo >= 2) {
                    return {false,
                            BalanceWitness{subword(w, hi_pos, len),
                                           subword(w, lo_pos, len), c}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
    if (n == 0) throw std::domain_error("factor length must be >= 1");
    if (n > w.size()) {
        throw std::domain_error("factor length exceeds the word length");
    }
    std::unordered_set<std::string_view> seen;
    const char* base = reinterpret_cast<const char*>(w.letters().data());
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        seen.insert(std::string_view(base + i, n));
    }
    return seen.size();
}

std::map<Letter, Rational> letter_frequencies(const Word& w) {
    if (w.empty()) throw std::domain_error("frequencies of the empty word");
    std::map<Letter, Rational> out;
    const auto total = static_cast<long long>(w.size());
    for (Letter c = 0; c < w.alphabet()->size(); ++c) {
        out.emplace(c, Rational(static_cast<long long>(count_letter(w, c)), total));
    }
    return out;
}

std::optional<UltimatePeriod> detect_ultimate_period(const Word& w) {
    const std::size_t n = w.size();
    if (n < 4) throw std::domain_error("periodicity detection needs length >= 4");
    const auto s = w.letters();

    std::optional<UltimatePeriod> best;
    for (std::size_t q = 1; 3 * q <= n; ++q) {
        // Minimal preperiod for q: one past the last mismatch. Scanning
        // from the tail exits quickly on aperiodic inputs.
        std::size_t p = 0;
        for (std::size_t i = n - q; i-- > 0;) {
            if (s[i] != s[i + q]) {
                p = i + 1;
                break;
            }
        }
        if (p + 3 * q > n) continue;
        if (!best || p < best->preperiod ||
            (p == best->preperiod && q < best->period)) {
            best = UltimatePeriod{p, q};
        }
    }
    return best;
}

namespace {

template <typename T>
std::vector<std::size_t> palindromic_prefix_lengths(std::span<const T> seq) {
    std::vector<std::size_t> out;
    for (std::size_t len = 1; len <= seq.size(); ++len) {
        bool pal = true;
        for (std::size_t i = 0; 2 * i < len; ++i) {
            if (seq[i] != seq[len - 1 - i]) {
                pal = false;
                break;
            }
        }
        if (pal) out.push_back(len);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> palindromic_prefixes(const Word& w) {
    return palindromic_prefix_lengths(w.letters());
}

std::vector<std::size_t> palindromic_prefixes(std::span<const std::int64_t> seq) {
    return palindromic_prefix_lengths(seq);
}

}  // namespace pseudopal
