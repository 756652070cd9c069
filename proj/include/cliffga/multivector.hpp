#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffga/blades.hpp"
#include "cliffga/rational.hpp"
#include "cliffga/signature.hpp"

namespace cliffga {

// Element of Cl(p,q,r): finite map blade -> exact rational.  Zero
// coefficients are never stored; iteration order is ascending blade mask,
// which makes formatting and linear algebra deterministic.
class Multivector {
public:
    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector scalar(Signature sig, const Rational& c);
    static Multivector blade(Signature sig, std::uint64_t mask, const Rational& c = Rational(1));
    static Multivector generator(Signature sig, int i);  // e_i, 1-based

    const Signature& signature() const { return sig_; }
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

    Rational coeff(std::uint64_t mask) const;
    bool is_zero() const { return terms_.empty(); }

    // Accumulate c onto blade `mask`, dropping the term if it cancels.
    void add_term(std::uint64_t mask, const Rational& c);

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    Signature sig_;
    std::map<std::uint64_t, Rational> terms_;
};

Multivector mv_add(const Multivector& u, const Multivector& v);
Multivector mv_sub(const Multivector& u, const Multivector& v);
Multivector mv_scale(const Multivector& u, const Rational& c);
Multivector mv_mul(const Multivector& u, const Multivector& v);

inline Multivector operator+(const Multivector& u, const Multivector& v) { return mv_add(u, v); }
inline Multivector operator-(const Multivector& u, const Multivector& v) { return mv_sub(u, v); }
inline Multivector operator*(const Multivector& u, const Multivector& v) { return mv_mul(u, v); }
inline Multivector operator*(const Rational& c, const Multivector& u) { return mv_scale(u, c); }

// e_a -> (-1)^|a| e_a
Multivector grade_involution(const Multivector& u);
// e_a -> (-1)^(|a|(|a|-1)/2) e_a
Multivector reversion(const Multivector& u);
// grade involution composed with reversion
Multivector conjugation(const Multivector& u);
// Transposition: sum u_I e_I -> sum u_I (e_I)^{-1}; the antipode of the
// twisted group algebra.  Defined only for r = 0.
Multivector transposition(const Multivector& u);

// +/- e_I with e_I * (+/- e_I) = 1; sign is + exactly when e_I^2 = +1.
SignedBlade blade_inverse(const SignedBlade& x, const Signature& sig);

BladeIndex pseudoscalar(const Signature& sig);
// {1} for even n, {1, e_12...n} for odd n; commutation against every
// generator is re-checked on the way out.
std::vector<BladeIndex> center_basis(const Signature& sig);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: mv := [sign] term ((+|-) term)*, term := rational [*] blade |
// rational | blade, rational := int[/posint], blade := "e" digits (n <= 9)
// or "e[" comma-separated indices "]".
Multivector parse_mv(const Signature& sig, const std::string& text);
std::string format_mv(const Multivector& u);

}  // namespace cliffga
