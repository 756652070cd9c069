#include "cliffga/multivector.hpp"

#include <cctype>

namespace cliffga {

Multivector Multivector::scalar(Signature sig, const Rational& c) {
    Multivector m(sig);
    m.add_term(0, c);
    return m;
}

Multivector Multivector::blade(Signature sig, std::uint64_t mask, const Rational& c) {
    BladeIndex check(mask, sig.n());  // validates the mask
    Multivector m(sig);
    m.add_term(check.bits, c);
    return m;
}

Multivector Multivector::generator(Signature sig, int i) {
    if (i < 1 || i > sig.n()) throw std::invalid_argument("generator index out of range");
    return blade(sig, std::uint64_t{1} << (i - 1));
}

Rational Multivector::coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(std::uint64_t mask, const Rational& c) {
    if (c == 0) return;
    if (sig_.n() < 64 && (mask >> sig_.n()) != 0)
        throw std::invalid_argument("blade mask outside signature dimension");
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_same_sig(const Multivector& u, const Multivector& v) {
    if (!(u.signature() == v.signature()))
        throw std::invalid_argument("signature mismatch: " + u.signature().str() + " vs " +
                                    v.signature().str());
}

}  // namespace

Multivector mv_add(const Multivector& u, const Multivector& v) {
    require_same_sig(u, v);
    Multivector out = u;
    for (const auto& [mask, c] : v.terms()) out.add_term(mask, c);
    return out;
}

Multivector mv_sub(const Multivector& u, const Multivector& v) {
    require_same_sig(u, v);
    Multivector out = u;
    for (const auto& [mask, c] : v.terms()) out.add_term(mask, -c);
    return out;
}

Multivector mv_scale(const Multivector& u, const Rational& c) {
    Multivector out(u.signature());
    if (c == 0) return out;
    for (const auto& [mask, uc] : u.terms()) out.add_term(mask, uc * c);
    return out;
}

Multivector mv_mul(const Multivector& u, const Multivector& v) {
    require_same_sig(u, v);
    const Signature& sig = u.signature();
    const int n = sig.n();
    Multivector out(sig);
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            CmulResult r = cmul_blades(BladeIndex(a, n), BladeIndex(b, n), sig);
            if (r.coeff == 0) continue;
            Rational prod = ca * cb;
            if (r.coeff < 0) prod = -prod;
            out.add_term(r.blade.bits, prod);
        }
    }
    return out;
}

namespace {

Multivector map_blades(const Multivector& u, int (*sign_of)(int grade)) {
    Multivector out(u.signature());
    for (const auto& [mask, c] : u.terms()) {
        int g = std::popcount(mask);
        out.add_term(mask, sign_of(g) > 0 ? c : -c);
    }
    return out;
}

}  // namespace

Multivector grade_involution(const Multivector& u) {
    return map_blades(u, [](int g) { return (g & 1) ? -1 : 1; });
}

Multivector reversion(const Multivector& u) {
    return map_blades(u, [](int g) { return ((g * (g - 1) / 2) & 1) ? -1 : 1; });
}

Multivector conjugation(const Multivector& u) {
    return map_blades(u, [](int g) { return ((g * (g + 1) / 2) & 1) ? -1 : 1; });
}

Multivector transposition(const Multivector& u) {
    const Signature& sig = u.signature();
    if (sig.degenerate())
        throw std::domain_error("transposition is defined only for non-degenerate signatures");
    Multivector out(sig);
    for (const auto& [mask, c] : u.terms()) {
        int s = blade_square_sign(BladeIndex(mask, sig.n()), sig);
        out.add_term(mask, s > 0 ? c : -c);
    }
    return out;
}

SignedBlade blade_inverse(const SignedBlade& x, const Signature& sig) {
    if (x.blade.bits & sig.degenerate_mask())
        throw std::domain_error("degenerate blade is not invertible");
    int s = blade_square_sign(x.blade, sig);
    return SignedBlade(s * x.sign, x.blade);
}

BladeIndex pseudoscalar(const Signature& sig) {
    if (sig.degenerate()) throw std::domain_error("pseudoscalar utilities require r = 0");
    return BladeIndex(sig.full_mask(), sig.n());
}

std::vector<BladeIndex> center_basis(const Signature& sig) {
    if (sig.degenerate()) throw std::domain_error("center_basis requires r = 0");
    const int n = sig.n();
    std::vector<BladeIndex> basis{BladeIndex(0, n)};
    if (n % 2 == 1) basis.push_back(pseudoscalar(sig));
    for (const BladeIndex& b : basis) {
        for (int i = 1; i <= n; ++i) {
            BladeIndex ei(std::uint64_t{1} << (i - 1), n);
            CmulResult lhs = cmul_blades(b, ei, sig);
            CmulResult rhs = cmul_blades(ei, b, sig);
            if (!(lhs.coeff == rhs.coeff && lhs.blade == rhs.blade))
                throw std::logic_error("center basis element fails to commute with e_" +
                                       std::to_string(i));
        }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    Int read_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos, "expected a digit");
        std::string lit;
        while (std::isdigit(static_cast<unsigned char>(peek()))) lit += s[pos++];
        return Int(lit);
    }

    // blade := "e" digit+  |  "e[" int ("," int)* "]"
    std::uint64_t read_blade(const Signature& sig) {
        ++pos;  // consume 'e'
        std::vector<int> idx;
        if (peek() == '[') {
            ++pos;
            while (true) {
                skip_ws();
                std::size_t at = pos;
                Int v = read_uint();
                if (v < 1 || v > sig.n()) throw ParseError(at, "blade index out of range");
                idx.push_back(static_cast<int>(v));
                skip_ws();
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                if (peek() == ']') {
                    ++pos;
                    break;
                }
                throw ParseError(pos, "expected ',' or ']' in blade index list");
            }
        } else {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos, "expected blade indices after 'e'");
            if (sig.n() > 9)
                throw ParseError(pos, "compact blade form requires n <= 9; use e[...]");
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                int v = s[pos] - '0';
                if (v < 1 || v > sig.n()) throw ParseError(pos, "blade index out of range");
                idx.push_back(v);
                ++pos;
            }
        }
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] <= idx[i - 1])
                throw ParseError(pos, "blade indices must be strictly increasing");
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << (i - 1);
        return mask;
    }
};

}  // namespace

Multivector parse_mv(const Signature& sig, const std::string& text) {
    Scanner sc{text};
    Multivector out(sig);
    sc.skip_ws();
    if (sc.done()) throw ParseError(0, "empty multivector");

    bool first = true;
    while (true) {
        int sign = 1;
        sc.skip_ws();
        if (sc.peek() == '+' || sc.peek() == '-') {
            if (sc.peek() == '-') sign = -1;
            ++sc.pos;
            sc.skip_ws();
        } else if (!first) {
            throw ParseError(sc.pos, "expected '+' or '-' between terms");
        }

        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            Int num = sc.read_uint();
            Int den = 1;
            if (sc.peek() == '/') {
                ++sc.pos;
                std::size_t at = sc.pos;
                den = sc.read_uint();
                if (den == 0) throw ParseError(at, "zero denominator");
            }
            coeff = Rational(num, den);
            have_coeff = true;
            if (sc.peek() == '*') ++sc.pos;
        }

        std::uint64_t mask = 0;
        if (sc.peek() == 'e') {
            mask = sc.read_blade(sig);
        } else if (!have_coeff) {
            throw ParseError(sc.pos, "expected a rational or a blade");
        }

        out.add_term(mask, sign > 0 ? coeff : -coeff);
        first = false;

        sc.skip_ws();
        if (sc.done()) break;
        if (sc.peek() != '+' && sc.peek() != '-')
            throw ParseError(sc.pos, "unexpected character");
    }
    return out;
}

std::string format_mv(const Multivector& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, c] : u.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string name = blade_name(BladeIndex(mask, u.signature().n()));
        if (name.empty()) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            out += name;
        } else {
            out += rational_to_string(mag) + "*" + name;
        }
        first = false;
    }
    return out;
}

}  // namespace cliffga
