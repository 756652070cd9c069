#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffga/blades.hpp"
#include "cliffga/finite_group.hpp"
#include "cliffga/signature.hpp"

namespace cliffga {

inline constexpr int kMaxVeeDim = 7;  // group order <= 256, the Table 2 scope

// Salingaros vee group G_{p,q} = { +/- e_I } under the Clifford product.
// Element order is (blade mask, sign) with + before -, so index 0 is +1,
// index 1 is -1 and +e_i sits at index 2^i.
struct VeeGroup {
    Signature sig;
    FiniteGroup group;
    std::vector<SignedBlade> element;  // group index -> signed blade
    int one = 0;
    int neg_one = 1;
    std::vector<int> generator;  // generator[i] = index of +e_{i+1}

    int index_of(std::uint64_t mask, int sign) const {
        return static_cast<int>(mask << 1) + (sign < 0 ? 1 : 0);
    }
};

// Construction verifies the vee group invariants: order 2^{1+p+q}, derived
// subgroup {+1,-1}, every element of order 1, 2 or 4.
VeeGroup vee_group(const Signature& sig, int max_dim = kMaxVeeDim);

enum class CenterType { Z2, Z2xZ2, Z4 };
std::string center_type_name(CenterType t);

// By p-q mod 8: Z2 for 0,2,4,6; Z2xZ2 for 1,5; Z4 for 3,7.  The computed
// center of the vee group is checked against the formula.
CenterType center_type(const Signature& sig, int max_dim = kMaxVeeDim);

enum class VeeFamily { N_odd, N_even, Omega_odd, Omega_even, S };

// One of the five Salingaros isomorphism classes, e.g. N3, Omega1, S2.
struct VeeClass {
    VeeFamily family;
    int k = 0;          // group order is 2^{2k+1} for N, 2^{2k+2} for Omega/S
    std::string name;   // display name, e.g. "N3", "Ω1", "S2"

    friend bool operator==(const VeeClass&, const VeeClass&) = default;
};

// Class membership is decided by the p-q mod 8 correspondence, then verified:
// the center type must match the family and (when verify_iso is set) the
// vee group must be isomorphic to the Salingaros central-product build.
VeeClass classify(const Signature& sig, bool verify_iso = true, int max_dim = kMaxVeeDim);

// Central-product construction per the Salingaros theorem, left-associated:
// N_{2k-1} = (D8)^{ok}, N_{2k} = (D8)^{o(k-1)} o Q8, Omega = N o (Z2xZ2),
// S_k = N_{2k-1} o Z4.  k = 0 denotes the trivial extensions N0, Omega0, S0.
FiniteGroup salingaros_build(const VeeClass& cls);

struct Table1Row {
    std::string cls;      // "N1", "Ω2", ...
    std::string center;   // "Z2", "Z2xZ2", "Z4"
    long long group_order = 0;
    long long algebra_dim = 0;
};
Table1Row table1_row(const VeeClass& cls);

// The five symbolic classification rows (one per family).
struct Table1SymbolicRow {
    std::string cls;
    std::string center;
    std::string group_order;
    std::string algebra_dim;
};
std::vector<Table1SymbolicRow> table1();

struct Table2Entry {
    Signature sig;
    VeeClass cls;
    CenterType center;
    long long group_order = 0;
    long long algebra_dim = 0;
};

// Sweep over all (p,q) with 2^{1+p+q} <= max_order, in (p+q, descending p)
// order.  verify_iso propagates to classify.
std::vector<Table2Entry> table2(long long max_order, bool verify_iso = true,
                                int max_dim = kMaxVeeDim);

}  // namespace cliffga
