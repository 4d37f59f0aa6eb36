#include "pseudopal/antimorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace pseudopal {

namespace {

void check_same_alphabet(const Antimorphism& v, const Word& w) {
    if (*v.alphabet() != *w.alphabet()) {
        throw std::domain_error("word alphabet does not match the antimorphism");
    }
}

}  // namespace

bool Antimorphism::is_identity_tau() const noexcept {
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
        if (tau_[i] != i) return false;
    }
    return true;
}

std::string Antimorphism::describe() const {
    std::string out;
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
        if (!out.empty()) out.push_back(',');
        out.push_back(alphabet_->symbols()[i]);
        out.push_back(':');
        out.push_back(alphabet_->symbols()[tau_[i]]);
    }
    return out;
}

Antimorphism make_antimorphism(AlphabetPtr alphabet,
                               std::span<const Letter> table) {
    if (!alphabet) throw std::invalid_argument("antimorphism requires an alphabet");
    const std::size_t n = alphabet->size();
    if (table.size() != n) {
        throw std::invalid_argument("tau table size does not match the alphabet");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i] >= n) {
            throw std::invalid_argument(
                std::string("tau maps '") + alphabet->symbols()[i] +
                "' outside the alphabet");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[table[i]] != i) {
            throw std::invalid_argument(
                std::string("tau is not an involution at letter '") +
                alphabet->symbols()[i] + "'");
        }
    }
    Antimorphism v;
    v.alphabet_ = std::move(alphabet);
    std::copy(table.begin(), table.end(), v.tau_.begin());
    return v;
}

Antimorphism make_antimorphism(
    AlphabetPtr alphabet, std::span<const std::pair<Letter, Letter>> pairs) {
    if (!alphabet) throw std::invalid_argument("antimorphism requires an alphabet");
    std::vector<Letter> table(alphabet->size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Letter>(i);
    for (auto [from, to] : pairs) {
        if (from >= table.size() || to >= table.size()) {
            throw std::invalid_argument("tau pair outside the alphabet");
        }
        table[from] = to;
    }
    return make_antimorphism(std::move(alphabet), table);
}

Antimorphism parse_antimorphism(AlphabetPtr alphabet, std::string_view spec) {
    std::vector<std::pair<Letter, Letter>> pairs;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view item = spec.substr(pos, end - pos);
        if (item.size() != 3 || item[1] != ':') {
            throw std::invalid_argument(
                "tau spec items must look like x:y, got \"" + std::string(item) + "\"");
        }
        pairs.emplace_back(alphabet->letter(item[0]), alphabet->letter(item[2]));
        pos = end + 1;
    }
    return make_antimorphism(std::move(alphabet), pairs);
}

Antimorphism reversal_antimorphism(AlphabetPtr alphabet) {
    std::vector<Letter> table(alphabet->size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Letter>(i);
    return make_antimorphism(std::move(alphabet), table);
}

Antimorphism exchange_antimorphism() {
    static const AlphabetPtr ab = make_alphabet("ab");
    const Letter table[] = {1, 0};
    return make_antimorphism(ab, table);
}

Antimorphism hybrid_antimorphism() {
    static const AlphabetPtr abc = make_alphabet("abc");
    const Letter table[] = {0, 2, 1};
    return make_antimorphism(abc, table);
}

Word apply(const Antimorphism& v, const Word& w) {
    check_same_alphabet(v, w);
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        letters.push_back(v.tau(*it));
    }
    return Word(w.alphabet(), std::move(letters));
}

bool is_pseudopalindrome(const Antimorphism& v, const Word& w) {
    check_same_alphabet(v, w);
    const auto letters = w.letters();
    const std::size_t n = letters.size();
    for (std::size_t i = 0; i <= (n > 0 ? (n - 1) / 2 : 0) && i < n; ++i) {
        if (letters[i] != v.tau(letters[n - 1 - i])) return false;
    }
    return true;
}

Word mu_morphism(const Antimorphism& v, const Word& w) {
    check_same_alphabet(v, w);
    std::vector<Letter> letters;
    letters.reserve(2 * w.size());
    for (Letter a : w.letters()) {
        letters.push_back(a);
        if (!v.fixes(a)) letters.push_back(v.tau(a));
    }
    return Word(w.alphabet(), std::move(letters));
}

}  // namespace pseudopal
