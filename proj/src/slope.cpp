#include "pseudopal/slope.hpp"

#include <limits>

namespace pseudopal {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    const BigInt lhs_scaled = num_ * rhs.den_;
    const BigInt rhs_scaled = rhs.num_ * den_;
    if (lhs_scaled < rhs_scaled) return std::strong_ordering::less;
    if (lhs_scaled > rhs_scaled) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int Rational::sign() const noexcept {
    return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

ContinuedFraction make_cf(std::vector<std::int64_t> quotients,
                          std::optional<std::vector<std::int64_t>> periodic_tail) {
    if (quotients.empty()) {
        throw std::invalid_argument("continued fraction needs at least a0");
    }
    if (quotients[0] != 0) {
        throw std::invalid_argument("slopes here lie in (0,1): a0 must be 0");
    }
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        if (quotients[i] < 1) {
            throw std::invalid_argument("partial quotients must be >= 1 from index 1");
        }
    }
    if (periodic_tail) {
        if (periodic_tail->empty()) {
            throw std::invalid_argument("periodic tail must be nonempty");
        }
        for (std::int64_t q : *periodic_tail) {
            if (q < 1) {
                throw std::invalid_argument("periodic tail quotients must be >= 1");
            }
        }
    }
    return {std::move(quotients), std::move(periodic_tail), false};
}

std::int64_t cf_quotient(const ContinuedFraction& cf, std::size_t i) {
    if (i < cf.quotients.size()) return cf.quotients[i];
    if (!cf.periodic_tail) {
        throw std::out_of_range("quotient index beyond a finite expansion");
    }
    return (*cf.periodic_tail)[(i - cf.quotients.size()) % cf.periodic_tail->size()];
}

std::size_t cf_available(const ContinuedFraction& cf) {
    return cf.periodic_tail ? std::numeric_limits<std::size_t>::max()
                            : cf.quotients.size();
}

ContinuedFraction directive_to_cf(const Word& w) {
    if (w.empty()) throw std::domain_error("directive must be nonempty");
    if (w.alphabet()->size() != 2) {
        throw std::domain_error("slope expansion is defined for binary directives");
    }
    if (w[0] != 0) {
        throw std::domain_error(
            "directive must start with the first alphabet letter; apply "
            "swap_binary_letters() first (note: the slope becomes 1 - alpha)");
    }
    const std::vector<Run> runs = run_length_encode(w);
    std::vector<std::int64_t> quotients;
    quotients.reserve(runs.size() + 1);
    quotients.push_back(0);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(runs[i].count);
        quotients.push_back(i == 0 ? 1 + d : d);
    }
    ContinuedFraction cf = make_cf(std::move(quotients));
    cf.last_provisional = true;
    return cf;
}

Word swap_binary_letters(const Word& w) {
    if (w.alphabet()->size() != 2) {
        throw std::domain_error("letter swap is defined for binary words");
    }
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter l : w.letters()) letters.push_back(static_cast<Letter>(1 - l));
    return Word(w.alphabet(), std::move(letters));
}

Rational cf_convergent(const ContinuedFraction& cf, std::size_t k) {
    if (!cf.periodic_tail && k >= cf.quotients.size()) {
        throw std::out_of_range("convergent index beyond available quotients");
    }
    BigInt p_prev = 1, p_prev2 = 0;  // p_{-1}, p_{-2}
    BigInt q_prev = 0, q_prev2 = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        const BigInt a = cf_quotient(cf, i);
        BigInt p = a * p_prev + p_prev2;
        BigInt q = a * q_prev + q_prev2;
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    return Rational(p_prev, q_prev);
}

bool is_sturm_number(const ContinuedFraction& cf) {
    if (!cf.periodic_tail) {
        throw not_applicable_error(
            "Sturm-number forms presuppose an eventually periodic expansion");
    }
    const std::size_t s = cf.periodic_tail->size();
    const std::size_t r = cf.quotients.size() - 1;  // quotients after a0
    const auto at = [&](std::size_t i) { return cf_quotient(cf, i); };

    // Earliest index from which the expansion is s-periodic; re-anchoring
    // the declared tail this way covers all of its cyclic shifts.
    std::size_t anchor = 1;
    for (std::size_t i = r; i >= 1; --i) {
        if (at(i) != at(i + s)) {
            anchor = i + 1;
            break;
        }
    }

    // Form 1: [0; 1, a0, (a1..ak)^w], ak >= a0.
    if (at(1) == 1 && anchor <= 3 && at(2 + s) >= at(2)) return true;
    // Form 2: [0; 1+a0, (a1..ak)^w], ak >= a0 >= 1.
    const std::int64_t a0 = at(1) - 1;
    if (a0 >= 1 && anchor <= 2 && at(1 + s) >= a0) return true;
    return false;
}

std::int64_t quotient_bound(const ContinuedFraction& cf, bool include_provisional) {
    std::size_t end = cf.quotients.size();
    if (cf.last_provisional && !include_provisional && !cf.periodic_tail) {
        --end;
    }
    std::int64_t best = 0;
    bool any = false;
    for (std::size_t i = 1; i < end; ++i) {
        best = std::max(best, cf.quotients[i]);
        any = true;
    }
    if (cf.periodic_tail) {
        for (std::int64_t q : *cf.periodic_tail) best = std::max(best, q);
        any = true;
    }
    if (!any) {
        throw std::domain_error("no quotients beyond a0 to bound");
    }
    return best;
}

}  // namespace pseudopal
