#include "cliffga/vee_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffga {

namespace {

int pq_mod8(const Signature& sig) { return ((sig.p - sig.q) % 8 + 8) % 8; }

std::string signed_blade_label(const SignedBlade& sb) {
    std::string name = sb.blade.is_scalar() ? "1" : blade_name(sb.blade);
    return sb.sign < 0 ? "-" + name : name;
}

}  // namespace

VeeGroup vee_group(const Signature& sig, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("vee groups require r = 0");
    const int n = sig.n();
    if (n > max_dim)
        throw std::runtime_error("vee group cap exceeded: p+q = " + std::to_string(n) +
                                 " > " + std::to_string(max_dim));

    VeeGroup v;
    v.sig = sig;
    const std::uint64_t blades = std::uint64_t{1} << n;
    const int order = static_cast<int>(2 * blades);

    std::vector<std::string> labels;
    labels.reserve(order);
    for (std::uint64_t mask = 0; mask < blades; ++mask) {
        for (int s : {1, -1}) {
            v.element.emplace_back(s, BladeIndex(mask, n));
            labels.push_back(signed_blade_label(v.element.back()));
        }
    }

    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            const SignedBlade &x = v.element[a], &y = v.element[b];
            CmulResult r = cmul_blades(x.blade, y.blade, sig);
            table[a][b] = v.index_of(r.blade.bits, r.coeff * x.sign * y.sign);
        }
    }
    v.group = FiniteGroup::from_table(std::move(labels), std::move(table));

    v.one = 0;
    v.neg_one = 1;
    for (int i = 1; i <= n; ++i)
        v.generator.push_back(v.index_of(std::uint64_t{1} << (i - 1), 1));

    // Vee group invariants.
    if (v.group.identity != v.one) throw std::logic_error("vee group identity misplaced");
    Subgroup derived = derived_subgroup(v.group);
    if (n >= 2 && derived.members != std::vector<int>{v.one, v.neg_one})
        throw std::logic_error("vee group derived subgroup is not {1,-1}");
    for (int x = 0; x < v.group.size(); ++x) {
        int ord = order_of(v.group, x);
        if (ord != 1 && ord != 2 && ord != 4)
            throw std::logic_error("vee group element of unexpected order");
    }
    return v;
}

std::string center_type_name(CenterType t) {
    switch (t) {
        case CenterType::Z2: return "Z2";
        case CenterType::Z2xZ2: return "Z2xZ2";
        case CenterType::Z4: return "Z4";
    }
    return "?";
}

CenterType center_type(const Signature& sig, int max_dim) {
    const int m = pq_mod8(sig);
    CenterType predicted;
    if (m == 1 || m == 5)
        predicted = CenterType::Z2xZ2;
    else if (m == 3 || m == 7)
        predicted = CenterType::Z4;
    else
        predicted = CenterType::Z2;

    VeeGroup v = vee_group(sig, max_dim);
    Subgroup z = center(v.group);
    CenterType computed;
    if (z.size() == 2) {
        computed = CenterType::Z2;
    } else if (z.size() == 4) {
        bool has_order4 = false;
        for (int x : z.members)
            if (order_of(v.group, x) == 4) has_order4 = true;
        computed = has_order4 ? CenterType::Z4 : CenterType::Z2xZ2;
    } else {
        throw std::logic_error("vee group center of unexpected order " +
                               std::to_string(z.size()));
    }
    if (computed != predicted)
        throw std::logic_error("center type formula disagrees with computed center at " +
                               sig.str());
    return predicted;
}

namespace {

std::string class_display_name(VeeFamily family, int k) {
    switch (family) {
        case VeeFamily::N_odd: return "N" + std::to_string(2 * k - 1);
        case VeeFamily::N_even: return "N" + std::to_string(2 * k);
        case VeeFamily::Omega_odd: return "Ω" + std::to_string(2 * k - 1);
        case VeeFamily::Omega_even: return "Ω" + std::to_string(2 * k);
        case VeeFamily::S: return "S" + std::to_string(k);
    }
    return "?";
}

CenterType family_center(VeeFamily family) {
    switch (family) {
        case VeeFamily::N_odd:
        case VeeFamily::N_even: return CenterType::Z2;
        case VeeFamily::Omega_odd:
        case VeeFamily::Omega_even: return CenterType::Z2xZ2;
        case VeeFamily::S: return CenterType::Z4;
    }
    return CenterType::Z2;
}

}  // namespace

VeeClass classify(const Signature& sig, bool verify_iso, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("classification requires r = 0");
    const int n = sig.n();
    const int m = pq_mod8(sig);

    VeeClass cls;
    if (sig.p == 0 && sig.q == 0) {
        // Table 2 lists the order-2 group {+1,-1} as N0.
        cls = VeeClass{VeeFamily::N_even, 0, "N0"};
    } else if (sig.p == 1 && sig.q == 0) {
        // Trivial extension: Table 2 lists G_{1,0} as Omega0.
        cls = VeeClass{VeeFamily::Omega_even, 0, "Ω0"};
    } else if (m == 0 || m == 2) {
        cls = VeeClass{VeeFamily::N_odd, n / 2, ""};
    } else if (m == 4 || m == 6) {
        cls = VeeClass{VeeFamily::N_even, n / 2, ""};
    } else if (m == 1) {
        cls = VeeClass{VeeFamily::Omega_odd, (n - 1) / 2, ""};
    } else if (m == 5) {
        cls = VeeClass{VeeFamily::Omega_even, (n - 1) / 2, ""};
    } else {
        cls = VeeClass{VeeFamily::S, (n - 1) / 2, ""};
    }
    if (cls.name.empty()) cls.name = class_display_name(cls.family, cls.k);

    // Cross-checks: the Table 1 column data and, on request, an explicit
    // isomorphism with the central-product construction.  The table is the
    // claim under test, never an oracle.
    if (center_type(sig, max_dim) != family_center(cls.family))
        throw std::logic_error("classified family disagrees with center type at " + sig.str());
    // The central-product build tops out at order 256 (Table 2 scope), so
    // the explicit isomorphism is only checked up to p+q = 7.
    if (verify_iso && n <= std::min(max_dim, kMaxVeeDim)) {
        VeeGroup v = vee_group(sig, max_dim);
        FiniteGroup built = salingaros_build(cls);
        if (built.size() != v.group.size())
            throw std::logic_error("salingaros build order mismatch at " + sig.str());
        if (!is_isomorphic(v.group, built))
            throw std::logic_error("vee group not isomorphic to its class build at " +
                                   sig.str());
    }
    return cls;
}

FiniteGroup salingaros_build(const VeeClass& cls) {
    const int k = cls.k;
    if (k < 0) throw std::invalid_argument("class index k must be non-negative");
    long long order = (cls.family == VeeFamily::N_odd || cls.family == VeeFamily::N_even)
                          ? (1LL << (2 * k + 1))
                          : (1LL << (2 * k + 2));
    if (order > kMaxGroupOrder) throw std::runtime_error("salingaros build exceeds order cap");

    auto n_odd = [&](int kk) {  // (D8)^{o kk}
        FiniteGroup g = builtin(BuiltinName::D8);
        for (int i = 1; i < kk; ++i) g = central_product_over_involutions(g, builtin(BuiltinName::D8));
        return g;
    };
    auto n_even = [&](int kk) {  // (D8)^{o (kk-1)} o Q8
        if (kk == 1) return builtin(BuiltinName::Q8);
        return central_product_over_involutions(n_odd(kk - 1), builtin(BuiltinName::Q8));
    };
    auto n_part = [&](VeeFamily f, int kk) -> FiniteGroup {
        if (kk == 0) return builtin(BuiltinName::Z2);
        return f == VeeFamily::N_odd || f == VeeFamily::Omega_odd ? n_odd(kk) : n_even(kk);
    };

    switch (cls.family) {
        case VeeFamily::N_odd:
        case VeeFamily::N_even:
            return n_part(cls.family, k);
        case VeeFamily::Omega_odd:
        case VeeFamily::Omega_even:
            return central_product_over_involutions(n_part(cls.family, k),
                                                    builtin(BuiltinName::Z2xZ2));
        case VeeFamily::S:
            if (k == 0)
                return central_product_over_involutions(builtin(BuiltinName::Z2),
                                                        builtin(BuiltinName::Z4));
            return central_product_over_involutions(n_odd(k), builtin(BuiltinName::Z4));
    }
    throw std::invalid_argument("unknown vee class family");
}

Table1Row table1_row(const VeeClass& cls) {
    Table1Row row;
    row.cls = cls.name;
    row.center = center_type_name(family_center(cls.family));
    const bool n_family = cls.family == VeeFamily::N_odd || cls.family == VeeFamily::N_even;
    row.group_order = n_family ? (1LL << (2 * cls.k + 1)) : (1LL << (2 * cls.k + 2));
    row.algebra_dim = row.group_order / 2;
    return row;
}

std::vector<Table1SymbolicRow> table1() {
    return {
        {"N_{2k-1}", "Z2", "2^{2k+1}", "2^{2k}"},
        {"N_{2k}", "Z2", "2^{2k+1}", "2^{2k}"},
        {"Ω_{2k-1}", "Z2xZ2", "2^{2k+2}", "2^{2k+1}"},
        {"Ω_{2k}", "Z2xZ2", "2^{2k+2}", "2^{2k+1}"},
        {"S_k", "Z4", "2^{2k+2}", "2^{2k+1}"},
    };
}

std::vector<Table2Entry> table2(long long max_order, bool verify_iso, int max_dim) {
    std::vector<Table2Entry> out;
    for (int n = 0; (2LL << n) <= max_order && n <= max_dim; ++n) {
        for (int p = n; p >= 0; --p) {
            Signature sig(p, n - p);
            Table2Entry e;
            e.sig = sig;
            e.cls = classify(sig, verify_iso, max_dim);
            e.center = center_type(sig, max_dim);
            e.group_order = 2LL << n;
            e.algebra_dim = 1LL << n;
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace cliffga
