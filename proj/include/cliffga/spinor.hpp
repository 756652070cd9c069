#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cliffga/linalg.hpp"
#include "cliffga/multivector.hpp"
#include "cliffga/report.hpp"
#include "cliffga/vee_group.hpp"

namespace cliffga {

// Radon-Hurwitz numbers: r_0..r_7 = 0,1,2,2,3,3,3,3 with r_{i+8} = r_i + 4,
// run in both directions (the downward extension covers r_{q-p} for q < p).
int radon_hurwitz(int i);

// k = q - r_{q-p}; the number of idempotent factors at this signature.
int k_value(const Signature& sig);

// k commuting basis monomials squaring to +1 with XOR-independent index
// sets, plus a sign per factor: f = prod (1 + s_j e_{I_j})/2.
struct IdempotentSpec {
    Signature sig;
    std::vector<std::uint64_t> monomials;
    std::vector<int> signs;
};

// Deterministic lexicographic search: candidates ordered by (grade, mask),
// signs all +.  Failure would falsify the structure theorem at this
// signature and is reported as such.
IdempotentSpec find_idempotent(const Signature& sig);

Multivector idempotent_multivector(const IdempotentSpec& spec);

// All 2^k sign patterns; pairwise products are verified to vanish and the
// sum to be exactly 1.
std::vector<Multivector> complete_set(const IdempotentSpec& spec);

struct OrbitStabilizer {
    std::vector<Multivector> orbit;
    Subgroup stabilizer;
};

// Orbit of f under g f g^{-1} over the vee group, and its stabilizer.
OrbitStabilizer orbit_stabilizer(const VeeGroup& v, const Multivector& f);

// T_{p,q}(f) = < -1, monomials of f >, order 2^{1+k}.
Subgroup idempotent_group(const VeeGroup& v, const IdempotentSpec& spec);

struct FieldRing {
    std::vector<Multivector> basis;            // f first, then ascending blade order
    std::vector<std::uint64_t> generator_masks;  // blade that produced each basis element
};

// Basis of K = f Cl f via the exact span of { f e_a f }.
FieldRing field_ring_basis(const VeeGroup& v, const Multivector& f);

// K_{p,q}(f) = < -1, monomials representing the K basis >.
Subgroup field_group(const VeeGroup& v, const FieldRing& ring);

// One positive monomial per coset of the stabilizer: a transversal whose
// products with f form a spinor basis of S = Cl f.
std::vector<std::uint64_t> spinor_basis(const VeeGroup& v, const Subgroup& stabilizer);

// Matrix with entries in K, acting on the spinor basis from the left:
// u m_j f = sum_i m_i f lambda_ij.
struct KMatrix {
    int n = 0;
    std::vector<Multivector> entries;  // row-major, n x n

    const Multivector& at(int i, int j) const { return entries[i * n + j]; }
    Multivector& at(int i, int j) { return entries[i * n + j]; }

    friend bool operator==(const KMatrix&, const KMatrix&) = default;
};

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b);

// Spinor representation gamma for simple Cl(p,q); solves exactly for the
// K-coordinates of u acting on the spinor basis.
class SpinorRep {
public:
    SpinorRep(const VeeGroup& v, const Multivector& f);

    const std::vector<std::uint64_t>& basis_monomials() const { return s_basis_; }
    const std::vector<Multivector>& k_basis() const { return k_basis_.basis; }
    int matrix_dim() const { return static_cast<int>(s_basis_.size()); }

    KMatrix gamma(const Multivector& u) const;
    KMatrix identity() const;

private:
    const VeeGroup* vee_;
    Multivector f_;
    FieldRing k_basis_;
    std::vector<std::uint64_t> s_basis_;
    RationalMatrix action_;  // blade coords of m_i k_t, column per (i, t)
};

struct SemisimpleSplit {
    Multivector plus;   // (1 + beta)/2
    Multivector minus;  // (1 - beta)/2
    std::size_t component_dim = 0;  // dimension of Cl c, each component
};

// Central idempotents (1 +/- beta)/2 for p - q = 1 mod 4, verified central,
// idempotent, orthogonal and summing to 1.
SemisimpleSplit semisimple_split(const Signature& sig);

// (psi, phi) = T(psi) phi, asserted to lie in K.
Multivector spinor_norm(const VeeGroup& v, const Multivector& f, const Multivector& psi,
                        const Multivector& phi);

// Membership in the invariance group of the transposition norm.
bool in_G_epsilon(const Signature& sig, const Multivector& g);

// Everything the CLI reports for one signature.  The vee group is held by
// shared pointer so the subgroups' parent pointers survive moves.
struct SpinorStructure {
    Signature sig;
    std::shared_ptr<VeeGroup> vee;
    IdempotentSpec spec;
    Multivector f{Signature{}};
    std::vector<Multivector> idempotents;  // complete set
    OrbitStabilizer orbit;
    Subgroup t_group;
    Subgroup k_group;
    FieldRing field;
    std::vector<std::uint64_t> s_basis;
};

SpinorStructure spinor_structure(const Signature& sig);

// Machine check of the ten main-theorem items plus the stabilizer and
// field-group order formulas.
Report verify_main_theorem(const Signature& sig, int max_dim = 5);

// Appendix structure-theorem desk check: idempotent count, mutual
// annihilation, sum, dim K mod-8 pattern, matrix dimension identity, and a
// verified spinor representation for small dimensions.
Report verify_structure(const Signature& sig, int rep_dim = 4, int max_dim = 6);

}  // namespace cliffga
