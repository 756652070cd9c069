#include "cliffga/spinor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cliffga {

int radon_hurwitz(int i) {
    static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    int m = ((i % 8) + 8) % 8;
    return base[m] + 4 * ((i - m) / 8);
}

int k_value(const Signature& sig) {
    if (sig.degenerate()) throw std::domain_error("k is defined for r = 0 only");
    int k = sig.q - radon_hurwitz(sig.q - sig.p);
    if (k < 0) throw std::logic_error("negative k at " + sig.str());
    return k;
}

namespace {

bool is_simple(const Signature& sig) { return (((sig.p - sig.q) % 4) + 4) % 4 != 1; }

std::vector<Rational> blade_coords(const Multivector& u) {
    std::vector<Rational> v(std::size_t{1} << u.signature().n(), Rational(0));
    for (const auto& [mask, c] : u.terms()) v[mask] = c;
    return v;
}

// Incremental exact span; rows kept reduced with unit pivots.
struct SpanBuilder {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;

    void reduce(std::vector<Rational>& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& c = v[pivots[i]];
            if (c == 0) continue;
            const Rational f = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
        }
    }

    bool contains(std::vector<Rational> v) const {
        reduce(v);
        for (const Rational& c : v)
            if (c != 0) return false;
        return true;
    }

    bool try_add(std::vector<Rational> v) {
        reduce(v);
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == v.size()) return false;
        const Rational f = v[piv];
        for (Rational& c : v) c /= f;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    std::size_t dim() const { return rows.size(); }

    RationalMatrix matrix() const {
        RationalMatrix m(0, rows.empty() ? 0 : rows.front().size());
        for (const auto& r : rows) m.append_row(r);
        return m;
    }
};

SpanBuilder span_of_left_ideal(const VeeGroup& v, const Multivector& f) {
    SpanBuilder s;
    const std::uint64_t blades = std::uint64_t{1} << v.sig.n();
    for (std::uint64_t a = 0; a < blades; ++a)
        s.try_add(blade_coords(mv_mul(Multivector::blade(v.sig, a), f)));
    return s;
}

Multivector element_mv(const VeeGroup& v, int index) {
    const SignedBlade& sb = v.element[index];
    return Multivector::blade(v.sig, sb.blade.bits, Rational(sb.sign));
}

bool blades_commute(std::uint64_t a, std::uint64_t b, const Signature& sig) {
    const int n = sig.n();
    return twist_sign(BladeIndex(a, n), BladeIndex(b, n), sig) ==
           twist_sign(BladeIndex(b, n), BladeIndex(a, n), sig);
}

// XOR-reduction of mask against an echelonized basis (keyed by top bit).
bool xor_independent(std::uint64_t mask, std::vector<std::uint64_t>& basis, bool insert) {
    for (std::uint64_t b : basis) mask = std::min(mask, mask ^ b);
    if (mask == 0) return false;
    if (insert) {
        basis.push_back(mask);
        std::sort(basis.begin(), basis.end(), std::greater<>());
    }
    return true;
}

}  // namespace

IdempotentSpec find_idempotent(const Signature& sig) {
    if (sig.degenerate()) throw std::domain_error("idempotent search requires r = 0");
    const int n = sig.n();
    if (n > kMaxVeeDim) throw std::runtime_error("idempotent search cap exceeded");
    const int k = k_value(sig);

    IdempotentSpec spec;
    spec.sig = sig;
    if (k == 0) return spec;

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (twist_sign(BladeIndex(m, n), BladeIndex(m, n), sig) == 1) candidates.push_back(m);
    std::sort(candidates.begin(), candidates.end(), [](std::uint64_t a, std::uint64_t b) {
        int ga = std::popcount(a), gb = std::popcount(b);
        return ga != gb ? ga < gb : a < b;
    });

    std::vector<std::uint64_t> chosen;
    std::vector<std::uint64_t> xor_basis;
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t pos = start; pos < candidates.size(); ++pos) {
            std::uint64_t m = candidates[pos];
            bool ok = true;
            for (std::uint64_t c : chosen)
                if (!blades_commute(c, m, sig)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<std::uint64_t> saved = xor_basis;
            if (!xor_independent(m, xor_basis, true)) continue;
            chosen.push_back(m);
            if (self(self, pos + 1)) return true;
            chosen.pop_back();
            xor_basis = std::move(saved);
        }
        return false;
    };
    if (!dfs(dfs, 0))
        throw std::logic_error(
            "no commuting monomial set found; this would falsify the structure theorem at " +
            sig.str());

    spec.monomials = chosen;
    spec.signs.assign(chosen.size(), 1);
    return spec;
}

Multivector idempotent_multivector(const IdempotentSpec& spec) {
    const Rational half(1, 2);
    Multivector f = Multivector::scalar(spec.sig, 1);
    for (std::size_t j = 0; j < spec.monomials.size(); ++j) {
        Multivector factor = Multivector::scalar(spec.sig, half);
        factor = mv_add(factor, Multivector::blade(spec.sig, spec.monomials[j],
                                                   Rational(spec.signs[j]) * half));
        f = mv_mul(f, factor);
    }
    return f;
}

std::vector<Multivector> complete_set(const IdempotentSpec& spec) {
    const std::size_t k = spec.monomials.size();
    std::vector<Multivector> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        IdempotentSpec flipped = spec;
        for (std::size_t j = 0; j < k; ++j)
            if (s & (std::uint64_t{1} << j)) flipped.signs[j] = -flipped.signs[j];
        Multivector f = idempotent_multivector(flipped);
        if (f.is_zero() || !(mv_mul(f, f) == f))
            throw std::logic_error("sign pattern does not yield an idempotent");
        out.push_back(std::move(f));
    }
    Multivector sum(spec.sig);
    for (const auto& f : out) sum = mv_add(sum, f);
    if (!(sum == Multivector::scalar(spec.sig, 1)))
        throw std::logic_error("complete idempotent set does not sum to 1");
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < out.size(); ++b)
            if (a != b && !mv_mul(out[a], out[b]).is_zero())
                throw std::logic_error("idempotents are not mutually annihilating");
    return out;
}

OrbitStabilizer orbit_stabilizer(const VeeGroup& v, const Multivector& f) {
    OrbitStabilizer os;
    std::vector<int> stab;
    for (int g = 0; g < v.group.size(); ++g) {
        Multivector conj = mv_mul(mv_mul(element_mv(v, g), f), element_mv(v, v.group.inv(g)));
        if (conj == f) stab.push_back(g);
        bool seen = false;
        for (const Multivector& o : os.orbit)
            if (o == conj) {
                seen = true;
                break;
            }
        if (!seen) os.orbit.push_back(std::move(conj));
    }
    os.stabilizer = make_subgroup(v.group, std::move(stab));
    if (os.orbit.size() * os.stabilizer.members.size() !=
        static_cast<std::size_t>(v.group.size()))
        throw std::logic_error("orbit-stabilizer count mismatch");
    return os;
}

Subgroup idempotent_group(const VeeGroup& v, const IdempotentSpec& spec) {
    std::vector<int> gens{v.neg_one};
    for (std::uint64_t m : spec.monomials) gens.push_back(v.index_of(m, 1));
    Subgroup t = subgroup_generated(v.group, gens);
    const std::size_t expected = std::size_t{2} << spec.monomials.size();
    if (t.members.size() != expected)
        throw std::logic_error("idempotent group order is not 2^{1+k}");
    return t;
}

FieldRing field_ring_basis(const VeeGroup& v, const Multivector& f) {
    FieldRing ring;
    SpanBuilder span;
    const std::uint64_t blades = std::uint64_t{1} << v.sig.n();
    for (std::uint64_t a = 0; a < blades; ++a) {
        Multivector w = mv_mul(mv_mul(f, Multivector::blade(v.sig, a)), f);
        if (w.is_zero()) continue;
        if (span.try_add(blade_coords(w))) {
            ring.basis.push_back(std::move(w));
            ring.generator_masks.push_back(a);
        }
    }
    return ring;
}

Subgroup field_group(const VeeGroup& v, const FieldRing& ring) {
    std::vector<int> gens{v.neg_one};
    for (std::uint64_t m : ring.generator_masks)
        if (m != 0) gens.push_back(v.index_of(m, 1));
    return subgroup_generated(v.group, gens);
}

std::vector<std::uint64_t> spinor_basis(const VeeGroup& v, const Subgroup& stabilizer) {
    std::vector<std::uint64_t> monomials;
    for (int rep : transversal(v.group, stabilizer)) {
        const SignedBlade& sb = v.element[rep];
        if (sb.sign != 1)
            throw std::logic_error("transversal representative is a negative blade");
        monomials.push_back(sb.blade.bits);
    }
    return monomials;
}

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("K-matrix size mismatch");
    KMatrix c;
    c.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            Multivector sum(a.entries.front().signature());
            for (int l = 0; l < a.n; ++l) sum = mv_add(sum, mv_mul(a.at(i, l), b.at(l, j)));
            c.entries.push_back(std::move(sum));
        }
    return c;
}

SpinorRep::SpinorRep(const VeeGroup& v, const Multivector& f)
    : vee_(&v), f_(f), k_basis_(field_ring_basis(v, f)) {
    if (!is_simple(v.sig))
        throw std::domain_error(
            "spinor representation requires a simple algebra; use semisimple_split");
    OrbitStabilizer os = orbit_stabilizer(v, f);
    s_basis_ = spinor_basis(v, os.stabilizer);

    const std::uint64_t blades = std::uint64_t{1} << v.sig.n();
    const std::size_t dimk = k_basis_.basis.size();
    action_ = RationalMatrix(blades, s_basis_.size() * dimk);
    for (std::size_t i = 0; i < s_basis_.size(); ++i) {
        Multivector mi = Multivector::blade(v.sig, s_basis_[i]);
        for (std::size_t t = 0; t < dimk; ++t) {
            std::vector<Rational> col = blade_coords(mv_mul(mi, k_basis_.basis[t]));
            for (std::uint64_t row = 0; row < blades; ++row)
                action_.at(row, i * dimk + t) = col[row];
        }
    }
}

KMatrix SpinorRep::gamma(const Multivector& u) const {
    const std::size_t dimk = k_basis_.basis.size();
    const int nmat = matrix_dim();
    KMatrix out;
    out.n = nmat;
    out.entries.assign(static_cast<std::size_t>(nmat) * nmat, Multivector(vee_->sig));
    for (int j = 0; j < nmat; ++j) {
        Multivector mj = Multivector::blade(vee_->sig, s_basis_[j]);
        Multivector b = mv_mul(mv_mul(u, mj), f_);
        auto x = solve(action_, blade_coords(b));
        if (!x) throw std::logic_error("spinor action does not lie in the span of the basis");
        for (int i = 0; i < nmat; ++i) {
            Multivector entry(vee_->sig);
            for (std::size_t t = 0; t < dimk; ++t)
                entry = mv_add(entry, mv_scale(k_basis_.basis[t], (*x)[i * dimk + t]));
            out.at(i, j) = std::move(entry);
        }
    }
    return out;
}

KMatrix SpinorRep::identity() const {
    const int nmat = matrix_dim();
    KMatrix out;
    out.n = nmat;
    out.entries.assign(static_cast<std::size_t>(nmat) * nmat, Multivector(vee_->sig));
    for (int i = 0; i < nmat; ++i) out.at(i, i) = f_;
    return out;
}

SemisimpleSplit semisimple_split(const Signature& sig) {
    if (is_simple(sig))
        throw std::invalid_argument("semisimple split requires p - q = 1 mod 4");
    const Rational half(1, 2);
    BladeIndex beta = pseudoscalar(sig);
    Multivector plus = mv_add(Multivector::scalar(sig, half),
                              Multivector::blade(sig, beta.bits, half));
    Multivector minus = mv_add(Multivector::scalar(sig, half),
                               Multivector::blade(sig, beta.bits, -half));

    for (const Multivector* c : {&plus, &minus}) {
        if (!(mv_mul(*c, *c) == *c)) throw std::logic_error("central projector not idempotent");
        for (int i = 1; i <= sig.n(); ++i) {
            Multivector ei = Multivector::generator(sig, i);
            if (!(mv_mul(*c, ei) == mv_mul(ei, *c)))
                throw std::logic_error("central projector fails to commute");
        }
    }
    if (!mv_mul(plus, minus).is_zero())
        throw std::logic_error("central projectors are not orthogonal");
    if (!(mv_add(plus, minus) == Multivector::scalar(sig, 1)))
        throw std::logic_error("central projectors do not sum to 1");

    SemisimpleSplit out{plus, minus, 0};
    SpanBuilder span;
    const std::uint64_t blades = std::uint64_t{1} << sig.n();
    for (std::uint64_t a = 0; a < blades; ++a)
        span.try_add(blade_coords(mv_mul(Multivector::blade(sig, a), plus)));
    out.component_dim = span.dim();
    return out;
}

Multivector spinor_norm(const VeeGroup& v, const Multivector& f, const Multivector& psi,
                        const Multivector& phi) {
    SpanBuilder s = span_of_left_ideal(v, f);
    if (!s.contains(blade_coords(psi)) || !s.contains(blade_coords(phi)))
        throw std::invalid_argument("spinor norm arguments must lie in S = Cl f");
    Multivector result = mv_mul(transposition(psi), phi);
    FieldRing ring = field_ring_basis(v, f);
    SpanBuilder kspan;
    for (const auto& b : ring.basis) kspan.try_add(blade_coords(b));
    if (!result.is_zero() && !kspan.contains(blade_coords(result)))
        throw std::logic_error("spinor norm left K = f Cl f");
    return result;
}

bool in_G_epsilon(const Signature& sig, const Multivector& g) {
    return mv_mul(transposition(g), g) == Multivector::scalar(sig, 1);
}

SpinorStructure spinor_structure(const Signature& sig) {
    SpinorStructure s;
    s.sig = sig;
    s.vee = std::make_shared<VeeGroup>(vee_group(sig));
    s.spec = find_idempotent(sig);
    s.f = idempotent_multivector(s.spec);
    s.idempotents = complete_set(s.spec);
    s.orbit = orbit_stabilizer(*s.vee, s.f);
    s.t_group = idempotent_group(*s.vee, s.spec);
    s.field = field_ring_basis(*s.vee, s.f);
    s.k_group = field_group(*s.vee, s.field);
    s.s_basis = spinor_basis(*s.vee, s.orbit.stabilizer);
    return s;
}

// ---------------------------------------------------------------------------
// Main Theorem verifier

namespace {

// Quotient outer/inner taken inside the parent group G.
FiniteGroup quotient_of_subgroups(const FiniteGroup& g, const Subgroup& outer,
                                  const Subgroup& inner) {
    SubgroupAsGroup asg = subgroup_as_group(g, outer);
    std::vector<int> inner_mapped;
    for (int m : inner.members) inner_mapped.push_back(asg.from_parent.at(m));
    return quotient(asg.group, make_subgroup(asg.group, inner_mapped)).group;
}

Json member_labels(const FiniteGroup& g, const std::vector<int>& members) {
    Json out = Json::array();
    for (int m : members) out.push_back(g.labels[m]);
    return out;
}

}  // namespace

Report verify_main_theorem(const Signature& sig, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("main theorem verification requires r = 0");
    if (sig.n() > max_dim)
        throw std::runtime_error("main theorem cap exceeded at " + sig.str());

    Report rep;
    rep.verifier = "main-theorem";
    rep.context = {{"p", sig.p}, {"q", sig.q}};

    VeeGroup v = vee_group(sig);
    const FiniteGroup& g = v.group;
    IdempotentSpec spec = find_idempotent(sig);
    Multivector f = idempotent_multivector(spec);

    Subgroup t = idempotent_group(v, spec);
    FieldRing ring = field_ring_basis(v, f);
    Subgroup kgrp = field_group(v, ring);
    OrbitStabilizer os = orbit_stabilizer(v, f);
    const Subgroup& gf = os.stabilizer;
    Subgroup pm = make_subgroup(g, {v.one, v.neg_one});

    const bool simple = is_simple(sig);
    const int k = k_value(sig);
    const int rqp = radon_hurwitz(sig.q - sig.p);

    // Order formulas from the stabilizer section.
    {
        long long expected = 1LL << ((simple ? 1 : 2) + sig.p + rqp);
        rep.checks.push_back({"stabilizer-order",
                              static_cast<long long>(gf.size()) == expected,
                              {{"computed", gf.size()}, {"expected", expected}}});
        long long n_expected = simple ? (1LL << k) : (1LL << (k - 1));
        rep.checks.push_back({"orbit-index",
                              static_cast<long long>(os.orbit.size()) == n_expected &&
                                  gf.size() * static_cast<long long>(os.orbit.size()) ==
                                      g.size(),
                              {{"orbit", os.orbit.size()}, {"expected", n_expected}}});
        int m8 = (((sig.p - sig.q) % 8) + 8) % 8;
        long long k_expected = (m8 == 0 || m8 == 1 || m8 == 2) ? 2
                               : (m8 == 3 || m8 == 7)          ? 4
                                                               : 8;
        rep.checks.push_back({"field-group-order",
                              static_cast<long long>(kgrp.size()) == k_expected,
                              {{"computed", kgrp.size()}, {"expected", k_expected}}});
    }

    // (i) Elements of T and K commute.
    {
        bool ok = true;
        for (int a : t.members)
            for (int b : kgrp.members)
                if (g.mul(a, b) != g.mul(b, a)) ok = false;
        rep.checks.push_back({"i-commutation", ok, {}});
    }

    // (ii) T meet K = {+1, -1}.
    {
        std::vector<int> inter;
        std::set_intersection(t.members.begin(), t.members.end(), kgrp.members.begin(),
                              kgrp.members.end(), std::back_inserter(inter));
        rep.checks.push_back({"ii-intersection", inter == pm.members,
                              {{"intersection", member_labels(g, inter)}}});
    }

    // (iii) G(f) = TK = KT.
    {
        std::set<int> tk, kt;
        for (int a : t.members)
            for (int b : kgrp.members) {
                tk.insert(g.mul(a, b));
                kt.insert(g.mul(b, a));
            }
        std::vector<int> tkv(tk.begin(), tk.end()), ktv(kt.begin(), kt.end());
        rep.checks.push_back({"iii-product-sets", tkv == gf.members && ktv == gf.members, {}});
    }

    // (iv) |G(f)| = |T||K|/2.
    rep.checks.push_back({"iv-order-identity",
                          2LL * gf.size() == static_cast<long long>(t.size()) * kgrp.size(),
                          {{"Gf", gf.size()}, {"T", t.size()}, {"K", kgrp.size()}}});

    // (v) G(f), T, K normal in G; T and K normal in G(f).
    {
        bool ok = is_normal(g, gf) && is_normal(g, t) && is_normal(g, kgrp);
        SubgroupAsGroup gfa = subgroup_as_group(g, gf);
        auto map_into = [&](const Subgroup& s) {
            std::vector<int> mapped;
            for (int m : s.members) mapped.push_back(gfa.from_parent.at(m));
            return make_subgroup(gfa.group, mapped);
        };
        ok = ok && is_normal(gfa.group, map_into(t)) && is_normal(gfa.group, map_into(kgrp));
        rep.checks.push_back({"v-normality", ok, {}});
    }

    // (vi) G(f)/K = T/G' and G(f)/T = K/G'.
    {
        FiniteGroup gf_by_k = quotient_of_subgroups(g, gf, kgrp);
        FiniteGroup t_by_pm = quotient_of_subgroups(g, t, pm);
        FiniteGroup gf_by_t = quotient_of_subgroups(g, gf, t);
        FiniteGroup k_by_pm = quotient_of_subgroups(g, kgrp, pm);
        rep.checks.push_back({"vi-quotient-isomorphisms",
                              is_isomorphic(gf_by_k, t_by_pm) && is_isomorphic(gf_by_t, k_by_pm),
                              {}});
    }

    // (vii) (G(f)/G')/(T/G') = G(f)/T = K/{+-1}, and the transversal of T
    // in G(f) spans K over R modulo f.
    {
        SubgroupAsGroup gfa = subgroup_as_group(g, gf);
        std::vector<int> pm_in, t_in;
        for (int m : pm.members) pm_in.push_back(gfa.from_parent.at(m));
        for (int m : t.members) t_in.push_back(gfa.from_parent.at(m));
        QuotientResult mod_pm = quotient(gfa.group, make_subgroup(gfa.group, pm_in));
        std::set<int> t_image;
        for (int m : t_in) t_image.insert(mod_pm.projection[m]);
        FiniteGroup lhs = quotient(mod_pm.group,
                                   make_subgroup(mod_pm.group,
                                                 std::vector<int>(t_image.begin(), t_image.end())))
                              .group;
        FiniteGroup mid = quotient_of_subgroups(g, gf, t);
        FiniteGroup rhs = quotient_of_subgroups(g, kgrp, pm);
        bool iso_ok = is_isomorphic(lhs, mid) && is_isomorphic(mid, rhs);

        SubgroupAsGroup gf_group = subgroup_as_group(g, gf);
        std::vector<int> t_members_in_gf;
        for (int m : t.members) t_members_in_gf.push_back(gf_group.from_parent.at(m));
        Subgroup t_in_gf = make_subgroup(gf_group.group, t_members_in_gf);
        SpanBuilder span;
        for (int rep_idx : transversal(gf_group.group, t_in_gf))
            span.try_add(blade_coords(mv_mul(element_mv(v, gf_group.to_parent[rep_idx]), f)));
        SpanBuilder kspan;
        for (const auto& b : ring.basis) kspan.try_add(blade_coords(b));
        bool span_ok = row_space_equal(span.matrix(), kspan.matrix());
        rep.checks.push_back({"vii-quotients-and-K-span", iso_ok && span_ok,
                              {{"dim_K", ring.basis.size()}}});
    }

    // S = Cl f as a row space.
    SpanBuilder s_span = span_of_left_ideal(v, f);

    // (viii) The transversal of G(f) in G spans S over K modulo f.
    {
        SpanBuilder span;
        for (std::uint64_t m : spinor_basis(v, gf))
            for (const auto& kb : ring.basis)
                span.try_add(blade_coords(mv_mul(Multivector::blade(sig, m), kb)));
        rep.checks.push_back({"viii-S-spans-over-K",
                              row_space_equal(span.matrix(), s_span.matrix()),
                              {{"dim_S", s_span.dim()}}});
    }

    // (ix) (G(f)/T) normal in (G/T) with quotient G/G(f); the transversal
    // of T in G spans S over R modulo f.
    {
        QuotientResult g_by_t = quotient(g, t);
        std::set<int> gf_image;
        for (int m : gf.members) gf_image.insert(g_by_t.projection[m]);
        Subgroup gf_in_q = make_subgroup(
            g_by_t.group, std::vector<int>(gf_image.begin(), gf_image.end()));
        bool normal_ok = is_normal(g_by_t.group, gf_in_q);
        FiniteGroup lhs = quotient(g_by_t.group, gf_in_q).group;
        FiniteGroup rhs = quotient(g, gf).group;
        bool iso_ok = is_isomorphic(lhs, rhs);

        SpanBuilder span;
        for (int rep_idx : transversal(g, t))
            span.try_add(blade_coords(mv_mul(element_mv(v, rep_idx), f)));
        bool span_ok = row_space_equal(span.matrix(), s_span.matrix());
        rep.checks.push_back({"ix-quotient-and-S-span", normal_ok && iso_ok && span_ok, {}});
    }

    // (x) G(f) is the centralizer of T in G.
    {
        std::vector<int> centralizer;
        for (int x = 0; x < g.size(); ++x) {
            bool commutes = true;
            for (int m : t.members)
                if (g.mul(x, m) != g.mul(m, x)) {
                    commutes = false;
                    break;
                }
            if (commutes) centralizer.push_back(x);
        }
        rep.checks.push_back({"x-centralizer", centralizer == gf.members,
                              {{"stabilizer", member_labels(g, gf.members)}}});
    }

    return rep;
}

Report verify_structure(const Signature& sig, int rep_dim, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("structure verification requires r = 0");
    const int n = sig.n();
    if (n > max_dim) throw std::runtime_error("structure verification cap exceeded at " + sig.str());

    Report rep;
    rep.verifier = "structure";
    rep.context = {{"p", sig.p}, {"q", sig.q}};

    const bool simple = is_simple(sig);
    const int k = k_value(sig);
    const int m8 = (((sig.p - sig.q) % 8) + 8) % 8;

    VeeGroup v = vee_group(sig);
    IdempotentSpec spec = find_idempotent(sig);
    Multivector f = idempotent_multivector(spec);

    // (c) 2^k mutually annihilating primitive idempotents adding up to 1.
    {
        std::vector<Multivector> set = complete_set(spec);
        bool count_ok = set.size() == (std::size_t{1} << k);
        bool annihilate = true, idem = true;
        for (std::size_t a = 0; a < set.size(); ++a) {
            if (!(mv_mul(set[a], set[a]) == set[a]) || set[a].is_zero()) idem = false;
            for (std::size_t b = 0; b < set.size(); ++b)
                if (a != b && !mv_mul(set[a], set[b]).is_zero()) annihilate = false;
        }
        Multivector sum(sig);
        for (const auto& e : set) sum = mv_add(sum, e);
        bool sum_ok = sum == Multivector::scalar(sig, 1);
        rep.checks.push_back({"idempotent-count", count_ok, {{"count", set.size()}, {"k", k}}});
        rep.checks.push_back({"idempotents-are-idempotent", idem, {}});
        rep.checks.push_back({"mutually-annihilating", annihilate, {}});
        rep.checks.push_back({"sum-to-unity", sum_ok, {}});
    }

    // (d) dim K matches the mod-8 pattern.
    FieldRing ring = field_ring_basis(v, f);
    {
        std::size_t expected = (m8 == 0 || m8 == 1 || m8 == 2) ? 1
                               : (m8 == 3 || m8 == 7)          ? 2
                                                               : 4;
        rep.checks.push_back({"dim-K-mod8",
                              ring.basis.size() == expected,
                              {{"dim_K", ring.basis.size()}, {"expected", expected}}});
    }

    // (a)/(b) Matrix algebra dimension identity, per simple component.
    {
        long long dimk = static_cast<long long>(ring.basis.size());
        bool ok = simple ? ((1LL << (2 * k)) * dimk == (1LL << n))
                         : ((1LL << (2 * (k - 1))) * dimk == (1LL << (n - 1)));
        rep.checks.push_back({"matrix-dimension-identity", ok,
                              {{"k", k}, {"dim_K", dimk}, {"simple", simple}}});
    }

    if (simple) {
        if (n <= rep_dim) {
            // (e) The representation is an algebra homomorphism, unital and
            // faithful, with 2^k x 2^k matrices.
            SpinorRep srep(v, f);
            bool size_ok = srep.matrix_dim() == (1 << k);

            std::vector<KMatrix> gammas;
            const std::uint64_t blades = std::uint64_t{1} << n;
            for (std::uint64_t a = 0; a < blades; ++a)
                gammas.push_back(srep.gamma(Multivector::blade(sig, a)));

            bool hom_ok = true;
            for (std::uint64_t a = 0; a < blades && hom_ok; ++a)
                for (std::uint64_t b = 0; b < blades && hom_ok; ++b) {
                    CmulResult r = cmul_blades(BladeIndex(a, n), BladeIndex(b, n), sig);
                    KMatrix lhs = kmatrix_mul(gammas[a], gammas[b]);
                    KMatrix rhs = gammas[r.blade.bits];
                    if (r.coeff < 0)
                        for (auto& e : rhs.entries) e = mv_scale(e, Rational(-1));
                    hom_ok = lhs == rhs;
                }

            bool unit_ok = gammas[0] == srep.identity();

            // Faithful: the flattened matrices of the blade images are
            // linearly independent.
            RationalMatrix flat(0, 0);
            for (const KMatrix& m : gammas) {
                std::vector<Rational> row;
                for (const Multivector& e : m.entries) {
                    std::vector<Rational> ec = blade_coords(e);
                    row.insert(row.end(), ec.begin(), ec.end());
                }
                flat.append_row(row);
            }
            bool faithful = rank(flat) == blades;

            rep.checks.push_back({"spinor-rep-size", size_ok, {{"dim", srep.matrix_dim()}}});
            rep.checks.push_back({"spinor-rep-homomorphism", hom_ok, {}});
            rep.checks.push_back({"spinor-rep-unital", unit_ok, {}});
            rep.checks.push_back({"spinor-rep-faithful", faithful, {}});
        }
    } else {
        // (b)/(f) Central idempotents and the double spinor space.
        SemisimpleSplit split = semisimple_split(sig);
        rep.checks.push_back({"central-idempotents", true, {}});
        rep.checks.push_back({"component-dimension",
                              split.component_dim == (std::size_t{1} << (n - 1)),
                              {{"dim", split.component_dim}}});

        if (n <= rep_dim) {
            // Basis of S + S^ with S = Cl f and S^ = Cl fhat.
            Multivector fhat = grade_involution(f);
            SpanBuilder dspan;
            std::vector<Multivector> dbasis;
            const std::uint64_t blades = std::uint64_t{1} << n;
            for (const Multivector* idem : {&f, &fhat})
                for (std::uint64_t a = 0; a < blades; ++a) {
                    Multivector w = mv_mul(Multivector::blade(sig, a), *idem);
                    if (!w.is_zero() && dspan.try_add(blade_coords(w))) dbasis.push_back(w);
                }

            // S alone must be a proper invariant subspace (reducibility).
            SpanBuilder s_only = span_of_left_ideal(v, f);
            bool invariant = true;
            for (std::uint64_t a = 0; a < blades && invariant; ++a)
                for (const auto& row : s_only.rows) {
                    Multivector w(sig);
                    for (std::uint64_t m = 0; m < blades; ++m)
                        if (row[m] != 0)
                            w = mv_add(w, Multivector::blade(sig, m, row[m]));
                    if (!s_only.contains(blade_coords(mv_mul(Multivector::blade(sig, a), w)))) {
                        invariant = false;
                        break;
                    }
                }
            bool proper = s_only.dim() > 0 && s_only.dim() < dspan.dim();
            rep.checks.push_back({"double-spinor-reducible", invariant && proper,
                                  {{"dim_S", s_only.dim()}, {"dim_total", dspan.dim()}}});

            // Faithful: blade actions on the S + S^ basis are independent.
            RationalMatrix flat(0, 0);
            RationalMatrix basis_mat = dspan.matrix();
            for (std::uint64_t a = 0; a < blades; ++a) {
                std::vector<Rational> row;
                for (const Multivector& w : dbasis) {
                    Multivector image = mv_mul(Multivector::blade(sig, a), w);
                    std::vector<Rational> ec = blade_coords(image);
                    row.insert(row.end(), ec.begin(), ec.end());
                }
                flat.append_row(row);
            }
            rep.checks.push_back({"double-spinor-faithful", rank(flat) == blades, {}});
        }
    }

    return rep;
}

}  // namespace cliffga
