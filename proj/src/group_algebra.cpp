#include "cliffga/group_algebra.hpp"

#include <stdexcept>

#include "cliffga/linalg.hpp"

namespace cliffga {

void GroupAlgebraElement::add_term(int elem, const Rational& c) {
    if (c == 0) return;
    if (elem < 0 || elem >= group->size())
        throw std::invalid_argument("group element index out of range");
    auto [it, inserted] = coeffs.try_emplace(elem, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

Rational GroupAlgebraElement::coeff(int elem) const {
    auto it = coeffs.find(elem);
    return it == coeffs.end() ? Rational(0) : it->second;
}

GroupAlgebraElement ga_basis(const FiniteGroup& g, int elem) {
    GroupAlgebraElement u(g);
    u.add_term(elem, 1);
    return u;
}

namespace {

void require_same_group(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    if (u.group != v.group) throw std::invalid_argument("group algebra element group mismatch");
}

}  // namespace

GroupAlgebraElement ga_add(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    require_same_group(u, v);
    GroupAlgebraElement out = u;
    for (const auto& [e, c] : v.coeffs) out.add_term(e, c);
    return out;
}

GroupAlgebraElement ga_scale(const GroupAlgebraElement& u, const Rational& c) {
    GroupAlgebraElement out(*u.group);
    for (const auto& [e, uc] : u.coeffs) out.add_term(e, uc * c);
    return out;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    require_same_group(u, v);
    GroupAlgebraElement out(*u.group);
    for (const auto& [g, cg] : u.coeffs)
        for (const auto& [h, ch] : v.coeffs) out.add_term(u.group->mul(g, h), cg * ch);
    return out;
}

GroupAlgebraElement antipode(const GroupAlgebraElement& u) {
    GroupAlgebraElement out(*u.group);
    for (const auto& [g, c] : u.coeffs) out.add_term(u.group->inv(g), c);
    return out;
}

std::vector<GroupAlgebraElement> central_ideal(const FiniteGroup& g, int z) {
    if (z == g.identity) throw std::invalid_argument("central ideal generator must be nontrivial");
    if (order_of(g, z) != 2) throw std::invalid_argument("ideal generator must be an involution");
    if (!center(g).contains(z)) throw std::invalid_argument("ideal generator must be central");

    Subgroup zsub = make_subgroup(g, {g.identity, z});
    std::vector<GroupAlgebraElement> basis;
    for (int rep : transversal(g, zsub)) {
        GroupAlgebraElement b(g);
        b.add_term(rep, 1);
        b.add_term(g.mul(z, rep), 1);
        basis.push_back(std::move(b));
    }
    return basis;
}

Multivector GroupToCliffordMap::apply(const GroupAlgebraElement& u) const {
    if (u.group != group) throw std::invalid_argument("element not over the map's group");
    Multivector out(sig);
    for (const auto& [e, c] : u.coeffs) out = mv_add(out, mv_scale(image[e], c));
    return out;
}

GroupToCliffordMap make_group_to_clifford_map(const FiniteGroup& g, const Signature& sig,
                                              std::vector<Multivector> image) {
    if (static_cast<int>(image.size()) != g.size())
        throw std::invalid_argument("image must be given for every group element");
    if (!(image[g.identity] == Multivector::scalar(sig, 1)))
        throw std::invalid_argument("group identity must map to 1");
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            if (!(mv_mul(image[x], image[y]) == image[g.mul(x, y)]))
                throw std::invalid_argument("assignment is not multiplicative at " +
                                            g.labels[x] + " * " + g.labels[y]);
    return GroupToCliffordMap{&g, sig, std::move(image)};
}

namespace {

// Chernov's relations (squares and tau-commutation) on the vee group
// generators, checked in the group table itself.
void require_chernov_relations(const VeeGroup& v) {
    const FiniteGroup& g = v.group;
    const int tau = v.neg_one;
    if (order_of(g, tau) != 2 || !center(g).contains(tau))
        throw std::logic_error("tau = -1 is not a central involution");
    const int n = v.sig.n();
    for (int i = 0; i < n; ++i) {
        int gi = v.generator[i];
        int sq = g.mul(gi, gi);
        int expected = (i < v.sig.p) ? g.identity : tau;
        if (sq != expected) throw std::logic_error("generator square relation fails");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int gj = v.generator[j];
            if (g.mul(gi, gj) != g.mul(tau, g.mul(gj, gi)))
                throw std::logic_error("generator commutation relation fails");
        }
    }
}

}  // namespace

GroupToCliffordMap chernov_psi(const VeeGroup& v) {
    require_chernov_relations(v);
    std::vector<Multivector> image;
    image.reserve(v.group.size());
    for (const SignedBlade& sb : v.element)
        image.push_back(Multivector::blade(v.sig, sb.blade.bits, Rational(sb.sign)));
    return make_group_to_clifford_map(v.group, v.sig, std::move(image));
}

std::vector<GroupAlgebraElement> kernel_basis(const GroupToCliffordMap& psi) {
    const FiniteGroup& g = *psi.group;
    const std::uint64_t blades = std::uint64_t{1} << psi.sig.n();
    RationalMatrix a(blades, g.size());
    for (int e = 0; e < g.size(); ++e)
        for (const auto& [mask, c] : psi.image[e].terms()) a.at(mask, e) = c;

    std::vector<GroupAlgebraElement> out;
    for (const auto& v : nullspace(a)) {
        GroupAlgebraElement u(g);
        for (int e = 0; e < g.size(); ++e) u.add_term(e, v[e]);
        out.push_back(std::move(u));
    }
    return out;
}

QuotientAlgebra quotient_algebra(const FiniteGroup& g, int z) {
    if (z == g.identity || order_of(g, z) != 2 || !center(g).contains(z))
        throw std::invalid_argument("quotient requires a nontrivial central involution");

    QuotientAlgebra q;
    q.group = g;
    q.z = z;
    q.basis_index.assign(g.size(), -1);
    q.basis_sign.assign(g.size(), 0);
    for (int x = 0; x < g.size(); ++x) {
        if (q.basis_index[x] >= 0) continue;
        int slot = static_cast<int>(q.basis.size());
        q.basis.push_back(x);
        q.basis_index[x] = slot;
        q.basis_sign[x] = 1;
        int partner = g.mul(z, x);
        q.basis_index[partner] = slot;
        q.basis_sign[partner] = -1;
    }

    const int d = q.dim();
    q.constants.assign(d, std::vector<std::pair<int, int>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int w = g.mul(q.basis[i], q.basis[j]);
            q.constants[i][j] = {q.basis_index[w], q.basis_sign[w]};
        }

    // Associativity of the structure constants, exhaustively.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto [ij, sij] = q.constants[i][j];
                auto [left, sleft] = q.constants[ij][k];
                auto [jk, sjk] = q.constants[j][k];
                auto [right, sright] = q.constants[i][jk];
                if (left != right || sij * sleft != sjk * sright)
                    throw std::logic_error("quotient algebra structure constants not associative");
            }
    return q;
}

std::vector<Rational> QuotientAlgebra::reduce(const GroupAlgebraElement& u) const {
    std::vector<Rational> coords(dim(), Rational(0));
    for (const auto& [e, c] : u.coeffs)
        coords[basis_index[e]] += basis_sign[e] > 0 ? c : -c;
    return coords;
}

Report verify_chernov(const Signature& sig, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("Chernov verification requires r = 0");
    if (sig.n() > max_dim)
        throw std::runtime_error("Chernov verification cap exceeded at " + sig.str());

    Report rep;
    rep.verifier = "chernov";
    rep.context = {{"p", sig.p}, {"q", sig.q}};

    VeeGroup v = vee_group(sig);
    const FiniteGroup& g = v.group;
    const int n = sig.n();
    const std::int64_t dim_cl = std::int64_t{1} << n;

    // Relations (squares and tau-commutation) hold in G_{p,q}.
    bool relations = true;
    try {
        require_chernov_relations(v);
    } catch (const std::logic_error&) {
        relations = false;
    }
    rep.checks.push_back({"generator-relations", relations, {}});

    GroupToCliffordMap psi = chernov_psi(v);

    // dim J = 2^n, with J spanned by (1+tau) g.
    std::vector<GroupAlgebraElement> ideal = central_ideal(g, v.neg_one);
    RationalMatrix ideal_rows(0, g.size());
    for (const auto& b : ideal) {
        std::vector<Rational> row(g.size(), Rational(0));
        for (const auto& [e, c] : b.coeffs) row[e] = c;
        ideal_rows.append_row(row);
    }
    bool dim_ok = static_cast<std::int64_t>(ideal.size()) == dim_cl &&
                  static_cast<std::int64_t>(rank(ideal_rows)) == dim_cl;
    rep.checks.push_back({"ideal-dimension", dim_ok, {{"dim", ideal.size()}}});

    // ker psi = J as row spaces.
    std::vector<GroupAlgebraElement> kernel = kernel_basis(psi);
    RationalMatrix kernel_rows(0, g.size());
    for (const auto& b : kernel) {
        std::vector<Rational> row(g.size(), Rational(0));
        for (const auto& [e, c] : b.coeffs) row[e] = c;
        kernel_rows.append_row(row);
    }
    rep.checks.push_back({"kernel-equals-ideal", row_space_equal(ideal_rows, kernel_rows),
                          {{"kernel_dim", kernel.size()}}});

    // Surjectivity: the images span Cl(p,q).
    RationalMatrix image_rows(0, dim_cl);
    for (int e = 0; e < g.size(); ++e) {
        std::vector<Rational> row(dim_cl, Rational(0));
        for (const auto& [mask, c] : psi.image[e].terms()) row[mask] = c;
        image_rows.append_row(row);
    }
    rep.checks.push_back(
        {"surjective", static_cast<std::int64_t>(rank(image_rows)) == dim_cl, {}});

    QuotientAlgebra qa = quotient_algebra(g, v.neg_one);
    rep.checks.push_back({"quotient-dimension", static_cast<std::int64_t>(qa.dim()) == dim_cl,
                          {{"dim", qa.dim()}}});

    // tau + J = (-1) + J.
    {
        std::vector<Rational> tau_coords = qa.reduce(ga_basis(g, v.neg_one));
        std::vector<Rational> minus_one = qa.reduce(ga_scale(ga_basis(g, g.identity), -1));
        rep.checks.push_back({"tau-coset-is-minus-one", tau_coords == minus_one, {}});
    }

    // Generator cosets anticommute and square to +/-1 per the relations.
    {
        bool anticommute = true, squares = true;
        for (int i = 0; i < n; ++i) {
            GroupAlgebraElement gi = ga_basis(g, v.generator[i]);
            GroupAlgebraElement sq = ga_mul(gi, gi);
            std::vector<Rational> expect =
                qa.reduce(ga_scale(ga_basis(g, g.identity), i < sig.p ? 1 : -1));
            if (qa.reduce(sq) != expect) squares = false;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                GroupAlgebraElement gj = ga_basis(g, v.generator[j]);
                GroupAlgebraElement sum = ga_add(ga_mul(gi, gj), ga_mul(gj, gi));
                for (const Rational& c : qa.reduce(sum))
                    if (c != 0) anticommute = false;
            }
        }
        rep.checks.push_back({"generator-cosets-anticommute", anticommute, {}});
        rep.checks.push_back({"generator-coset-squares", squares, {}});
    }

    // phi: R[G]/J -> Cl(p,q) is an isomorphism: the quotient basis is the
    // positive blades in lexicographic order and every structure constant
    // matches the blade product.
    {
        bool basis_ok = qa.dim() == static_cast<int>(dim_cl);
        for (int i = 0; i < qa.dim() && basis_ok; ++i) {
            const SignedBlade& sb = v.element[qa.basis[i]];
            basis_ok = sb.sign == 1 && sb.blade.bits == static_cast<std::uint64_t>(i);
        }
        bool constants_ok = true;
        for (int i = 0; i < qa.dim() && constants_ok; ++i)
            for (int j = 0; j < qa.dim() && constants_ok; ++j) {
                auto [slot, sign] = qa.constants[i][j];
                CmulResult r = cmul_blades(v.element[qa.basis[i]].blade,
                                           v.element[qa.basis[j]].blade, sig);
                constants_ok = r.coeff == sign &&
                               r.blade.bits == v.element[qa.basis[slot]].blade.bits;
            }
        rep.checks.push_back({"quotient-isomorphic-to-clifford", basis_ok && constants_ok, {}});

        // Isomorphism matrix in rational text form (basis i -> blade i).
        Json matrix = Json::array();
        for (int i = 0; i < qa.dim(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < qa.dim(); ++j)
                row.push_back(i == j ? "1" : "0");
            matrix.push_back(std::move(row));
        }
        rep.checks.back().detail = {{"isomorphism_matrix", std::move(matrix)}};
    }

    return rep;
}

TwistedGroupAlgebra twisted_group_algebra(const Signature& sig) {
    if (sig.degenerate()) throw std::domain_error("twisted group algebra requires r = 0");
    const int n = sig.n();
    return {sig, [sig, n](std::uint64_t x, std::uint64_t y) {
                return cocycle_gamma(BladeIndex(x, n), BladeIndex(y, n), sig);
            }};
}

TwistedGroupAlgebra untwisted_group_algebra(const Signature& sig) {
    return {sig, [](std::uint64_t, std::uint64_t) { return 1; }};
}

Report verify_passman(const Signature& sig, int max_dim) {
    if (sig.degenerate()) throw std::domain_error("Passman verification requires r = 0");
    const int n = sig.n();
    if (n > max_dim)
        throw std::runtime_error("Passman verification cap exceeded at " + sig.str());

    Report rep;
    rep.verifier = "passman";
    rep.context = {{"p", sig.p}, {"q", sig.q}};

    TwistedGroupAlgebra t = twisted_group_algebra(sig);
    const std::uint64_t m = std::uint64_t{1} << n;

    bool cocycle = true;
    for (std::uint64_t x = 0; x < m && cocycle; ++x)
        for (std::uint64_t y = 0; y < m && cocycle; ++y)
            for (std::uint64_t z = 0; z < m && cocycle; ++z)
                cocycle = t.gamma(x, y) * t.gamma(x ^ y, z) ==
                          t.gamma(y, z) * t.gamma(x, y ^ z);
    rep.checks.push_back({"cocycle-condition", cocycle, {}});

    // (i) gamma(1,1)^{-1} 1bar is the identity; gamma is normalized here.
    bool identity_ok = t.gamma(0, 0) == 1;
    for (std::uint64_t x = 0; x < m && identity_ok; ++x)
        identity_ok = t.gamma(0, x) == 1 && t.gamma(x, 0) == 1;
    rep.checks.push_back({"lemma-i-identity", identity_ok, {}});

    // (ii) xbar^{-1} = gamma(x,x^{-1}) gamma(1,1)^{-1} (x^{-1})bar; in
    // (Z_2)^n every element is its own group inverse.
    bool inverses_ok = true;
    for (std::uint64_t x = 0; x < m && inverses_ok; ++x) {
        int s = t.gamma(x, x);  // xbar xbar = s 1bar
        auto prod = t.mul_basis(x, x);
        inverses_ok = prod.mask == 0 && prod.coeff * s == 1;
    }
    rep.checks.push_back({"lemma-ii-inverses", inverses_ok, {}});

    // (iii) (xbar ybar)^{-1} = ybar^{-1} xbar^{-1}.
    bool antihom_ok = true;
    for (std::uint64_t x = 0; x < m && antihom_ok; ++x)
        for (std::uint64_t y = 0; y < m && antihom_ok; ++y) {
            // Left side: invert gamma(x,y) (x^y)bar.
            int lhs = t.gamma(x, y) * t.gamma(x ^ y, x ^ y);
            // Right side: gamma(y,y) ybar * gamma(x,x) xbar.
            int rhs = t.gamma(y, y) * t.gamma(x, x) * t.gamma(y, x);
            antihom_ok = lhs == rhs;
        }
    rep.checks.push_back({"lemma-iii-antihomomorphism", antihom_ok, {}});

    // The twisted structure constants are the blade structure constants.
    bool match = true;
    for (std::uint64_t x = 0; x < m && match; ++x)
        for (std::uint64_t y = 0; y < m && match; ++y) {
            auto prod = t.mul_basis(x, y);
            CmulResult r = cmul_blades(BladeIndex(x, n), BladeIndex(y, n), sig);
            match = prod.coeff == r.coeff && prod.mask == r.blade.bits;
        }
    rep.checks.push_back({"structure-constants-match-clifford", match, {}});

    // Trivial gamma yields the commutative group algebra of (Z_2)^n.
    TwistedGroupAlgebra plain = untwisted_group_algebra(sig);
    bool commutative = true;
    for (std::uint64_t x = 0; x < m && commutative; ++x)
        for (std::uint64_t y = 0; y < m && commutative; ++y) {
            auto a = plain.mul_basis(x, y);
            auto b = plain.mul_basis(y, x);
            commutative = a.coeff == b.coeff && a.mask == b.mask;
        }
    rep.checks.push_back({"untwisted-is-commutative", commutative, {}});

    return rep;
}

}  // namespace cliffga
