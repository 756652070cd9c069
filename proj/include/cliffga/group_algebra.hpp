#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cliffga/finite_group.hpp"
#include "cliffga/multivector.hpp"
#include "cliffga/rational.hpp"
#include "cliffga/report.hpp"
#include "cliffga/vee_group.hpp"

namespace cliffga {

// Element of F[G] over exact rationals: finite map group index -> coefficient.
struct GroupAlgebraElement {
    const FiniteGroup* group = nullptr;
    std::map<int, Rational> coeffs;

    explicit GroupAlgebraElement(const FiniteGroup& g) : group(&g) {}

    void add_term(int elem, const Rational& c);
    Rational coeff(int elem) const;
    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.group == b.group && a.coeffs == b.coeffs;
    }
};

GroupAlgebraElement ga_basis(const FiniteGroup& g, int elem);
GroupAlgebraElement ga_add(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement ga_scale(const GroupAlgebraElement& u, const Rational& c);
// Convolution product: (sum l_g g)(sum m_h h) = sum l_g m_h (gh).
GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
// Antipode: sum l_g g -> sum l_g g^{-1}; an involutive anti-automorphism.
GroupAlgebraElement antipode(const GroupAlgebraElement& u);

// Linear basis {(1+z)g : g in a transversal of <z>} of the ideal (1+z),
// for a central involution z.  Dimension |G|/2.
std::vector<GroupAlgebraElement> central_ideal(const FiniteGroup& g, int z);

// Algebra map R[G] -> Cl(p,q) determined by a multiplicative assignment of
// group elements to invertible multivectors; multiplicativity is verified
// on construction.
struct GroupToCliffordMap {
    const FiniteGroup* group = nullptr;
    Signature sig;
    std::vector<Multivector> image;  // per group element

    Multivector apply(const GroupAlgebraElement& u) const;
};

GroupToCliffordMap make_group_to_clifford_map(const FiniteGroup& g, const Signature& sig,
                                              std::vector<Multivector> image);

// Chernov's map psi for G = G_{p,q}: 1 -> 1, -1 -> -1, e_I -> e_I.  The
// relations tau^2 = 1, g_i^2 = +/-1, g_i g_j = tau g_j g_i are checked in
// the group before the map is built.
GroupToCliffordMap chernov_psi(const VeeGroup& v);

// Kernel of the linear extension, via exact linear algebra; each basis
// vector is returned as a group algebra element.
std::vector<GroupAlgebraElement> kernel_basis(const GroupToCliffordMap& psi);

// R[G]/(1+z) on the basis of cosets of a deterministic transversal of <z>.
// Structure constants are monomial: b_i b_j = sign * b_k.
struct QuotientAlgebra {
    FiniteGroup group;
    int z = -1;
    std::vector<int> basis;        // transversal element indices
    std::vector<int> basis_index;  // group element -> its transversal slot
    std::vector<int> basis_sign;   // group element -> +1 if in transversal "sheet", else -1
    std::vector<std::vector<std::pair<int, int>>> constants;  // (slot, sign) per (i,j)

    int dim() const { return static_cast<int>(basis.size()); }
    // Coordinates of the coset of a group algebra element.
    std::vector<Rational> reduce(const GroupAlgebraElement& u) const;
};

QuotientAlgebra quotient_algebra(const FiniteGroup& g, int z);

// Full Chernov verification at one signature; see the report for the
// individual relations.
Report verify_chernov(const Signature& sig, int max_dim = 6);

// Twisted group algebra of (Z_2)^n with an explicit 2-cocycle; the
// Brauer-Weyl gamma gives Cl(p,q) on the nose, the trivial gamma gives the
// plain group algebra.
struct TwistedGroupAlgebra {
    Signature sig;
    std::function<int(std::uint64_t, std::uint64_t)> gamma;  // values +1/-1

    struct BasisProduct {
        int coeff;
        std::uint64_t mask;
    };
    BasisProduct mul_basis(std::uint64_t x, std::uint64_t y) const {
        return {gamma(x, y), x ^ y};
    }
};

TwistedGroupAlgebra twisted_group_algebra(const Signature& sig);
TwistedGroupAlgebra untwisted_group_algebra(const Signature& sig);  // gamma == 1

// Cocycle condition plus Passman's lemma items (i)-(iii), exhaustive.
Report verify_passman(const Signature& sig, int max_dim = 5);

}  // namespace cliffga
