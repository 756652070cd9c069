#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffga/signature.hpp"

namespace cliffga {

// Basis monomial e_a of Cl(p,q,r) encoded as a binary n-tuple: generator e_i
// sits in bit i-1, so oplus is a single XOR and the sign rules below reduce
// to masked popcounts. The empty tuple is the identity monomial 1.
struct BladeIndex {
    std::uint64_t bits = 0;
    int dim = 0;

    BladeIndex() = default;
    BladeIndex(std::uint64_t bits_, int dim_) : bits(bits_), dim(dim_) {
        if (dim < 0 || dim > kMaxBladeDim)
            throw std::invalid_argument("blade dimension out of range");
        if (dim < 64 && (bits >> dim) != 0)
            throw std::invalid_argument("blade index has bits beyond dimension " +
                                        std::to_string(dim));
    }

    static BladeIndex from_indices(const std::vector<int>& indices, int dim) {
        std::uint64_t b = 0;
        for (int i : indices) {
            if (i < 1 || i > dim)
                throw std::invalid_argument("blade generator index out of range");
            std::uint64_t bit = std::uint64_t{1} << (i - 1);
            if (b & bit) throw std::invalid_argument("repeated generator index in blade");
            b |= bit;
        }
        return BladeIndex(b, dim);
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < dim; ++i)
            if (bits & (std::uint64_t{1} << i)) out.push_back(i + 1);
        return out;
    }

    int grade() const { return std::popcount(bits); }
    bool is_scalar() const { return bits == 0; }

    friend bool operator==(const BladeIndex&, const BladeIndex&) = default;
};

// +e_I or -e_I; these are exactly the vee group elements.
struct SignedBlade {
    int sign = 1;  // +1 or -1, never 0
    BladeIndex blade;

    SignedBlade() = default;
    SignedBlade(int sign_, BladeIndex blade_) : sign(sign_), blade(blade_) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("signed blade sign must be +1 or -1");
    }

    friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

namespace detail {

inline void require_same_dim(const BladeIndex& a, const BladeIndex& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("blade dimension mismatch: " + std::to_string(a.dim) +
                                    " vs " + std::to_string(b.dim));
}

inline void require_fits(const BladeIndex& a, const Signature& sig) {
    if (a.dim != sig.n())
        throw std::invalid_argument("blade of dimension " + std::to_string(a.dim) +
                                    " does not match signature " + sig.str());
}

inline int parity_sign(std::uint64_t word) { return (std::popcount(word) & 1) ? -1 : 1; }

// Prefix XOR: bit i of the result is the XOR of bits 0..i of x.
inline std::uint64_t prefix_xor(std::uint64_t x) {
    x ^= x << 1;
    x ^= x << 2;
    x ^= x << 4;
    x ^= x << 8;
    x ^= x << 16;
    x ^= x << 32;
    return x;
}

}  // namespace detail

// Componentwise sum mod 2; blade index of e_{a (+) b}.
inline BladeIndex oplus(const BladeIndex& a, const BladeIndex& b) {
    detail::require_same_dim(a, b);
    return BladeIndex(a.bits ^ b.bits, a.dim);
}

// Walsh function w_a(b) = (-1)^(sum a_i b_i).
inline int walsh(const BladeIndex& a, const BladeIndex& b) {
    detail::require_same_dim(a, b);
    return detail::parity_sign(a.bits & b.bits);
}

// Gray code g(k)_1 = k_1, g(k)_i = k_{i-1} + k_i mod 2.
inline BladeIndex gray(const BladeIndex& k) {
    std::uint64_t g = k.bits ^ (k.bits << 1);
    if (k.dim < 64) g &= (k.dim == 0) ? 0 : (~std::uint64_t{0} >> (64 - k.dim));
    return BladeIndex(g, k.dim);
}

// Lounesto's inverse h(a)_i = sum_{j<=i} a_j mod 2; h(g(k)) = k.
inline BladeIndex gray_inverse(const BladeIndex& a) {
    std::uint64_t h = detail::prefix_xor(a.bits);
    if (a.dim < 64) h &= (a.dim == 0) ? 0 : (~std::uint64_t{0} >> (64 - a.dim));
    return BladeIndex(h, a.dim);
}

// Full scalar coefficient of e_{a (+) b} in the non-degenerate product:
// (-1)^(sum_{i<=p} a_i b_i) * w_a(h(b)).  Brauer-Weyl sign.
inline int twist_sign(const BladeIndex& a, const BladeIndex& b, const Signature& sig) {
    detail::require_same_dim(a, b);
    detail::require_fits(a, sig);
    int metric = detail::parity_sign(a.bits & b.bits & sig.positive_mask());
    std::uint64_t h = detail::prefix_xor(b.bits);  // bits beyond n drop out of the AND below
    int w = detail::parity_sign(a.bits & h & sig.full_mask());
    return metric * w;
}

struct CmulResult {
    int coeff = 0;  // -1, 0 or +1; 0 only when blades share a degenerate generator
    BladeIndex blade;
};

// Signed blade product e_I e_J in Cl(p,q,r).  The degenerate extension
// kills the product exactly when the operands share a generator that
// squares to zero; the r_factor is an intersection test on the top index
// range rather than the literal product formula.
inline CmulResult cmul_blades(const BladeIndex& eI, const BladeIndex& eJ, const Signature& sig) {
    detail::require_same_dim(eI, eJ);
    detail::require_fits(eI, sig);
    if (eI.bits & eJ.bits & sig.degenerate_mask())
        return {0, BladeIndex(0, sig.n())};
    return {twist_sign(eI, eJ, sig), oplus(eI, eJ)};
}

// e_I^2 = (+1 or -1) * 1 for non-degenerate blades.
inline int blade_square_sign(const BladeIndex& a, const Signature& sig) {
    CmulResult sq = cmul_blades(a, a, sig);
    if (sq.coeff == 0)
        throw std::domain_error("blade contains a degenerate generator; square is 0");
    return sq.coeff;
}

// Twist coefficient gamma(x,y) of the twisted group algebra R^t[(Z_2)^n];
// satisfies the cocycle identity gamma(x,y)gamma(x+y,z) = gamma(y,z)gamma(x,y+z).
inline int cocycle_gamma(const BladeIndex& x, const BladeIndex& y, const Signature& sig) {
    if (sig.degenerate())
        throw std::domain_error(
            "cocycle values must be units; degenerate signatures are unsupported");
    return twist_sign(x, y, sig);
}

// Blade display name: "" for the scalar blade (callers render it as "1"),
// "e13" for n <= 9, "e[1,13]" beyond.
inline std::string blade_name(const BladeIndex& a) {
    if (a.is_scalar()) return "";
    std::string s = "e";
    if (a.dim <= 9) {
        for (int i : a.indices()) s += static_cast<char>('0' + i);
    } else {
        s += "[";
        bool first = true;
        for (int i : a.indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        s += "]";
    }
    return s;
}

}  // namespace cliffga
