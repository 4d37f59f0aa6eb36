#include "pseudopal/closure.hpp"

#include <cassert>
#include <stdexcept>

namespace pseudopal {

namespace {

void check_same_alphabet(const Antimorphism& v, const Word& w) {
    if (*v.alphabet() != *w.alphabet()) {
        throw std::domain_error("word alphabet does not match the antimorphism");
    }
}

}  // namespace

SuffixPalindromeIndex::SuffixPalindromeIndex(const Antimorphism& v)
    : sigma_(v.alphabet()->size()) {
    for (std::size_t i = 0; i < sigma_; ++i) {
        tau_[i] = v.tau(static_cast<Letter>(i));
    }
    nodes_.push_back({-1, kOddRoot});  // odd root: suffix link to itself
    nodes_.push_back({0, kOddRoot});
    children_.assign(2 * sigma_, kNone);
    last_ = kEvenRoot;
}

std::int32_t SuffixPalindromeIndex::new_node(std::int32_t len, std::int32_t slink) {
    nodes_.push_back({len, slink});
    children_.insert(children_.end(), sigma_, kNone);
    return static_cast<std::int32_t>(nodes_.size()) - 1;
}

std::int32_t SuffixPalindromeIndex::find_extensible(std::int32_t start,
                                                    Letter c) const {
    const std::int64_t p = static_cast<std::int64_t>(buffer_.size()) - 1;
    const Letter t = tau_[c];
    std::int32_t x = start;
    while (true) {
        // Position of the letter that would sit opposite c; for the odd
        // root this is c itself, making the test tau(c) == c.
        const std::int64_t mirror = p - 1 - nodes_[x].len;
        if (mirror >= 0 && buffer_[static_cast<std::size_t>(mirror)] == t) return x;
        if (x == kOddRoot) return kNone;
        x = nodes_[x].slink;
    }
}

void SuffixPalindromeIndex::append(Letter c) {
    assert(c < sigma_);
    buffer_.push_back(c);

    const std::int32_t base = find_extensible(last_, c);
    if (base == kNone) {
        // No nonempty pseudopalindromic suffix remains.
        last_ = kEvenRoot;
        return;
    }
    if (std::int32_t existing = child(base, c); existing != kNone) {
        last_ = existing;
        return;
    }

    const std::int32_t len = nodes_[base].len + 2;
    std::int32_t slink;
    if (len == 1) {
        slink = kEvenRoot;
    } else {
        const std::int32_t via = find_extensible(nodes_[base].slink, c);
        slink = (via == kNone) ? kEvenRoot : child(via, c);
        assert(slink != kNone);
    }
    const std::int32_t node = new_node(len, slink);
    set_child(base, c, node);
    last_ = node;
}

std::size_t SuffixPalindromeIndex::longest_suffix_length() const noexcept {
    return static_cast<std::size_t>(nodes_[last_].len);
}

std::size_t longest_pseudopalindromic_suffix(const Word& w, const Antimorphism& v) {
    check_same_alphabet(v, w);
    SuffixPalindromeIndex index(v);
    for (Letter c : w.letters()) index.append(c);
    return index.longest_suffix_length();
}

std::size_t longest_pseudopalindromic_suffix_naive(const Word& w,
                                                   const Antimorphism& v) {
    check_same_alphabet(v, w);
    const auto letters = w.letters();
    for (std::size_t len = letters.size(); len >= 1; --len) {
        const std::size_t start = letters.size() - len;
        bool ok = true;
        for (std::size_t i = 0; i < len; ++i) {
            if (letters[start + i] != v.tau(letters[start + len - 1 - i])) {
                ok = false;
                break;
            }
        }
        if (ok) return len;
    }
    return 0;
}

namespace {

// Appends V(s) for s = buffer[0 .. buffer.size()-suffix_len), letter by
// letter, turning the whole buffer into the closure of its old value.
void close_buffer(SuffixPalindromeIndex& index, const Antimorphism& v,
                  std::size_t suffix_len) {
    const std::size_t s_len = index.size() - suffix_len;
    const auto& buf = index.buffer();
    for (std::size_t i = 0; i < s_len; ++i) {
        index.append(v.tau(buf[s_len - 1 - i]));
    }
    assert(index.longest_suffix_length() == index.size());
}

}  // namespace

Word pseudopalindromic_closure(const Word& w, const Antimorphism& v) {
    check_same_alphabet(v, w);
    SuffixPalindromeIndex index(v);
    for (Letter c : w.letters()) index.append(c);
    close_buffer(index, v, index.longest_suffix_length());
    return Word(w.alphabet(), index.buffer());
}

Word iterated_closure(const Word& w, const Antimorphism& v) {
    check_same_alphabet(v, w);
    SuffixPalindromeIndex index(v);
    for (Letter c : w.letters()) {
        index.append(c);
        close_buffer(index, v, index.longest_suffix_length());
    }
    return Word(w.alphabet(), index.buffer());
}

DirectiveSpec DirectiveSpec::finite(Word w) {
    Word empty(w.alphabet());
    return {Kind::Finite, std::move(w), std::move(empty)};
}

DirectiveSpec DirectiveSpec::eventually_periodic(Word u, Word v) {
    if (v.empty()) {
        throw std::invalid_argument("periodic part of a directive must be nonempty");
    }
    if (*u.alphabet() != *v.alphabet()) {
        throw std::domain_error("directive parts must share one alphabet");
    }
    return {Kind::EventuallyPeriodic, std::move(u), std::move(v)};
}

DirectiveSpec DirectiveSpec::self_directed(Word seed) {
    if (seed.empty()) {
        throw std::invalid_argument("self-directed generation requires a seed");
    }
    Word empty(seed.alphabet());
    return {Kind::SelfDirected, std::move(seed), std::move(empty)};
}

DirectiveSpec parse_directive(AlphabetPtr alphabet, std::string_view text) {
    const std::size_t open = text.find('(');
    if (open == std::string_view::npos) {
        return DirectiveSpec::finite(Word::from_string(std::move(alphabet), text));
    }
    const std::size_t close = text.find(')', open);
    if (close == std::string_view::npos || text.substr(close + 1) != "^w") {
        throw std::invalid_argument(
            "directive spec must be \"letters\" or \"u(v)^w\", got \"" +
            std::string(text) + "\"");
    }
    Word u = Word::from_string(alphabet, text.substr(0, open));
    Word v = Word::from_string(std::move(alphabet),
                               text.substr(open + 1, close - open - 1));
    return DirectiveSpec::eventually_periodic(std::move(u), std::move(v));
}

PrefixStream::PrefixStream(Antimorphism v, DirectiveSpec directive, bool verify)
    : v_(std::move(v)), directive_(std::move(directive)), index_(v_), verify_(verify) {
    if (*v_.alphabet() != *directive_.alphabet()) {
        throw std::domain_error("directive alphabet does not match the antimorphism");
    }
}

bool PrefixStream::directive_exhausted() const noexcept {
    return directive_.kind == DirectiveSpec::Kind::Finite &&
           consumed_ >= directive_.head.size();
}

void PrefixStream::step() {
    Letter next;
    switch (directive_.kind) {
        case DirectiveSpec::Kind::Finite:
            next = directive_.head[consumed_];
            break;
        case DirectiveSpec::Kind::EventuallyPeriodic:
            next = consumed_ < directive_.head.size()
                       ? directive_.head[consumed_]
                       : directive_.cycle[(consumed_ - directive_.head.size()) %
                                          directive_.cycle.size()];
            break;
        case DirectiveSpec::Kind::SelfDirected:
            if (consumed_ < directive_.head.size()) {
                next = directive_.head[consumed_];
            } else {
                if (consumed_ >= index_.size()) {
                    throw std::logic_error(
                        "self-directed generation stalled: seed is not a prefix "
                        "of its own closure limit");
                }
                next = index_.buffer()[consumed_];
            }
            break;
    }

    index_.append(next);
    if (verify_) {
        const std::size_t naive = longest_pseudopalindromic_suffix_naive(
            Word(v_.alphabet(), index_.buffer()), v_);
        if (naive != index_.longest_suffix_length()) {
            throw std::logic_error(
                "suffix index self-check failed at length " +
                std::to_string(index_.size()) + ": incremental " +
                std::to_string(index_.longest_suffix_length()) + " vs naive " +
                std::to_string(naive));
        }
    }
    close_buffer(index_, v_, index_.longest_suffix_length());
    ++consumed_;
}

void PrefixStream::generate_to(std::size_t m) {
    while (index_.size() < m && !directive_exhausted()) step();
}

Word PrefixStream::prefix_word(std::size_t m) const {
    const auto& buf = index_.buffer();
    const std::size_t n = std::min(m, buf.size());
    return Word(v_.alphabet(), std::vector<Letter>(buf.begin(), buf.begin() + n));
}

PrefixStream::Result PrefixStream::request(std::size_t m) {
    generate_to(m);
    if (index_.size() < m) {
        return {prefix_word(index_.size()), true};
    }
    return {prefix_word(m), false};
}

}  // namespace pseudopal
