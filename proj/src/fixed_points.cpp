#include "pseudopal/fixed_points.hpp"

#include <stdexcept>

namespace pseudopal {

std::string FamilyDescriptor::name() const {
    switch (family_) {
        case Family::R: return "R";
        case Family::E: return "E";
        case Family::H: return "H";
        case Family::Trivial: return "trivial";
    }
    return "?";
}

FamilyDescriptor make_family(Family family, int n, AlphabetPtr alphabet) {
    if (!alphabet) throw std::invalid_argument("family requires an alphabet");
    if (n < 1) throw std::invalid_argument("family parameter n must be >= 1");
    switch (family) {
        case Family::R:
        case Family::E:
            if (alphabet->size() != 2) {
                throw std::invalid_argument("R and E families need a 2-letter alphabet");
            }
            break;
        case Family::H:
            if (alphabet->size() != 3) {
                throw std::invalid_argument("H family needs a 3-letter alphabet");
            }
            break;
        case Family::Trivial:
            break;
    }
    if (family == Family::E && n != 1) {
        throw std::invalid_argument(
            "the exchange family exists only for n = 1: a fixed point starting "
            "a^n b with n >= 2 would need a^2 as a prefix of its own closure, "
            "which fails under the exchange");
    }
    FamilyDescriptor desc;
    desc.family_ = family;
    desc.n_ = n;
    desc.alphabet_ = std::move(alphabet);
    return desc;
}

Antimorphism family_antimorphism(const FamilyDescriptor& desc) {
    switch (desc.family()) {
        case Family::R:
        case Family::Trivial:
            return reversal_antimorphism(desc.alphabet());
        case Family::E: {
            const Letter table[] = {1, 0};
            return make_antimorphism(desc.alphabet(), table);
        }
        case Family::H: {
            const Letter table[] = {0, 2, 1};
            return make_antimorphism(desc.alphabet(), table);
        }
    }
    throw std::logic_error("unreachable family kind");
}

Word family_seed(const FamilyDescriptor& desc) {
    std::vector<Letter> letters;
    switch (desc.family()) {
        case Family::E:
            letters.push_back(0);  // tau(a) = b forces u_1 = a
            break;
        case Family::R:
        case Family::H:
            letters.assign(static_cast<std::size_t>(desc.n()), 0);
            letters.push_back(1);  // u_1 = a^n b
            break;
        case Family::Trivial:
            throw std::domain_error("the trivial family has no approximant seed");
    }
    return Word(desc.alphabet(), std::move(letters));
}

Word closure_approximant(const FamilyDescriptor& desc, int k) {
    if (k < 1) throw std::domain_error("approximant index must be >= 1");
    const Antimorphism v = family_antimorphism(desc);
    Word u = family_seed(desc);
    for (int i = 2; i <= k; ++i) u = iterated_closure(u, v);
    return u;
}

PrefixStream family_stream(const FamilyDescriptor& desc, bool verify) {
    Antimorphism v = family_antimorphism(desc);
    if (desc.family() == Family::Trivial) {
        // a^w directs itself; stream it as a plain periodic directive.
        Word cycle(desc.alphabet(), std::vector<Letter>{0});
        DirectiveSpec spec = DirectiveSpec::eventually_periodic(
            Word(desc.alphabet()), std::move(cycle));
        return PrefixStream(std::move(v), std::move(spec), verify);
    }
    DirectiveSpec spec = DirectiveSpec::self_directed(family_seed(desc));
    return PrefixStream(std::move(v), std::move(spec), verify);
}

Word fixed_point_prefix(const FamilyDescriptor& desc, std::size_t m) {
    PrefixStream stream = family_stream(desc);
    return stream.request(m).prefix;
}

FixedPointReport verify_fixed_point(const Word& w, const Antimorphism& v) {
    if (*w.alphabet() != *v.alphabet()) {
        throw std::domain_error("word alphabet does not match the antimorphism");
    }
    PrefixStream stream(v, DirectiveSpec::finite(w));
    std::size_t compared = 0;
    while (true) {
        // Compare the freshly generated region before consuming more of w.
        const auto& buf = stream.buffer();
        const std::size_t upto = std::min(w.size(), buf.size());
        for (; compared < upto; ++compared) {
            if (buf[compared] != w[compared]) {
                return {false, compared + 1, compared + 1};
            }
        }
        if (buf.size() >= w.size() || stream.directive_exhausted()) break;
        stream.generate_to(buf.size() + 1);
    }
    return {true, compared, std::nullopt};
}

Word companion_word(const FamilyDescriptor& desc, std::size_t m) {
    if (desc.family() != Family::E && desc.family() != Family::H) {
        throw std::domain_error(
            "companion is defined for the E and H families; elsewhere it "
            "equals the word itself");
    }
    const Antimorphism classical = reversal_antimorphism(desc.alphabet());
    // The directive is the fixed point itself. Closure lengths grow
    // exponentially per directive letter, so a short fixed-point prefix
    // suffices; double it until the request no longer runs dry.
    for (std::size_t k = 8;; k *= 2) {
        PrefixStream stream(classical,
                            DirectiveSpec::finite(fixed_point_prefix(desc, k)));
        PrefixStream::Result res = stream.request(m);
        if (!res.exhausted) return res.prefix;
    }
}

}  // namespace pseudopal
