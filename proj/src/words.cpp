#include "pseudopal/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace pseudopal {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty() || symbols_.size() > kMaxAlphabetSize) {
        throw std::invalid_argument("alphabet size must be 1.." +
                                    std::to_string(kMaxAlphabetSize));
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isprint(c)) {
            throw std::invalid_argument("alphabet symbols must be printable");
        }
        if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                        symbols_[i] + "'");
        }
    }
}

char Alphabet::symbol(Letter i) const {
    if (!contains(i)) throw std::domain_error("letter index outside alphabet");
    return symbols_[i];
}

std::optional<Letter> Alphabet::index_of(char c) const noexcept {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<Letter>(pos);
}

Letter Alphabet::letter(char c) const {
    auto i = index_of(c);
    if (!i) throw std::domain_error(std::string("character '") + c +
                                    "' not in alphabet \"" + symbols_ + "\"");
    return *i;
}

AlphabetPtr make_alphabet(std::string symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
    for (Letter l : letters_) {
        if (!alphabet_->contains(l)) {
            throw std::domain_error("letter index outside alphabet");
        }
    }
}

Word Word::from_string(AlphabetPtr alphabet, std::string_view text) {
    if (!alphabet) throw std::invalid_argument("word requires an alphabet");
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(alphabet->letter(c));
    return Word(std::move(alphabet), std::move(letters));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(alphabet_->symbols()[l]);
    return out;
}

Word Word::operator+(const Word& rhs) const {
    if (*alphabet_ != *rhs.alphabet_) {
        throw std::domain_error("concatenation across distinct alphabets");
    }
    std::vector<Letter> letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(alphabet_, std::move(letters));
}

bool Word::operator==(const Word& rhs) const {
    return *alphabet_ == *rhs.alphabet_ && letters_ == rhs.letters_;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    return std::lexicographical_compare_three_way(
        letters_.begin(), letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
}

std::size_t count_letter(const Word& w, Letter a) {
    if (!w.alphabet()->contains(a)) {
        throw std::domain_error("letter index outside alphabet");
    }
    return static_cast<std::size_t>(
        std::count(w.letters().begin(), w.letters().end(), a));
}

Word reversal(const Word& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(letters));
}

std::vector<Run> run_length_encode(const Word& w) {
    std::vector<Run> runs;
    for (Letter l : w.letters()) {
        if (!runs.empty() && runs.back().letter == l) {
            ++runs.back().count;
        } else {
            runs.push_back({l, 1});
        }
    }
    return runs;
}

Word run_length_decode(AlphabetPtr alphabet, std::span<const Run> runs) {
    std::vector<Letter> letters;
    for (const Run& r : runs) {
        if (r.count == 0) throw std::domain_error("run count must be >= 1");
        letters.insert(letters.end(), r.count, r.letter);
    }
    return Word(std::move(alphabet), std::move(letters));
}

std::vector<Word> factors_of_length(const Word& w, std::size_t n) {
    if (n == 0) throw std::domain_error("factor length must be >= 1");
    std::vector<Word> out;
    if (n > w.size()) return out;

    // Dedupe through views into the letter buffer; materialize once.
    std::unordered_set<std::string_view> seen;
    const char* base = reinterpret_cast<const char*>(w.letters().data());
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        std::string_view view(base + i, n);
        if (seen.insert(view).second) {
            std::vector<Letter> letters(w.letters().begin() + i,
                                        w.letters().begin() + i + n);
            out.emplace_back(w.alphabet(), std::move(letters));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pseudopal
