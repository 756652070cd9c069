#include "cliffga/finite_group.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace cliffga {

namespace {

// Greedy generating set; by the Burnside basis theorem this is irredundant,
// hence minimal for the 2-groups we care about.
std::vector<int> generating_set(const std::vector<std::vector<int>>& table, int identity) {
    const int n = static_cast<int>(table.size());
    std::vector<bool> in_closure(n, false);
    std::vector<int> closure{identity};
    in_closure[identity] = true;
    std::vector<int> gens;

    auto close_with = [&](int g) {
        std::vector<int> work{g};
        if (!in_closure[g]) {
            in_closure[g] = true;
            closure.push_back(g);
        }
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < closure.size(); ++i) {
                for (int prod : {table[x][closure[i]], table[closure[i]][x]}) {
                    if (!in_closure[prod]) {
                        in_closure[prod] = true;
                        closure.push_back(prod);
                        work.push_back(prod);
                    }
                }
            }
        }
    };

    for (int g = 0; g < n; ++g) {
        if (!in_closure[g]) {
            gens.push_back(g);
            close_with(g);
        }
    }
    return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw std::invalid_argument("group must be non-empty");
    if (n > kMaxGroupOrder)
        throw std::invalid_argument("group order exceeds cap of " +
                                    std::to_string(kMaxGroupOrder));
    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("table size does not match element count");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }

    // Latin square.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j]]) throw std::invalid_argument("table row is not a permutation");
            seen_row[table[i][j]] = true;
            if (seen_col[table[j][i]])
                throw std::invalid_argument("table column is not a permutation");
            seen_col[table[j][i]] = true;
        }
    }

    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw std::invalid_argument("table has no identity element");

    // Two-sided inverses.
    std::vector<int> inverse(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (table[x][y] == identity && table[y][x] == identity) {
                inverse[x] = y;
                break;
            }
        }
        if (inverse[x] < 0) throw std::invalid_argument("element without a two-sided inverse");
    }

    // Light's associativity test over a generating set.
    std::vector<int> gens = generating_set(table, identity);
    for (int a : gens)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (table[table[x][a]][y] != table[x][table[a][y]])
                    throw std::invalid_argument("table is not associative");

    FiniteGroup g;
    g.labels = std::move(labels);
    g.table = std::move(table);
    g.identity = identity;
    g.inverse = std::move(inverse);
    return g;
}

FiniteGroup FiniteGroup::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    std::vector<std::string> labels;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) labels.push_back(cell);
    }
    std::vector<std::vector<int>> table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stoi(cell));
        table.push_back(std::move(row));
    }
    return from_table(std::move(labels), std::move(table));
}

void FiniteGroup::to_csv(std::ostream& out) const {
    for (int i = 0; i < size(); ++i) out << (i ? "," : "") << labels[i];
    out << "\n";
    for (const auto& row : table) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
        out << "\n";
    }
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h{&g, std::move(members)};
    if (!h.contains(g.identity)) throw std::invalid_argument("subgroup must contain identity");
    for (int a : h.members) {
        if (!h.contains(g.inv(a))) throw std::invalid_argument("subgroup not closed under inverse");
        for (int b : h.members)
            if (!h.contains(g.mul(a, b)))
                throw std::invalid_argument("subgroup not closed under product");
    }
    return h;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> members{g.identity};
    std::vector<int> work;
    for (int x : gens)
        if (members.insert(x).second) work.push_back(x);
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        std::vector<int> snapshot(members.begin(), members.end());
        for (int y : snapshot) {
            for (int prod : {g.mul(x, y), g.mul(y, x)})
                if (members.insert(prod).second) work.push_back(prod);
        }
    }
    return Subgroup{&g, std::vector<int>(members.begin(), members.end())};
}

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<int> image) {
    if (static_cast<int>(image.size()) != source.size())
        throw std::invalid_argument("hom image must cover every source element");
    for (int v : image)
        if (v < 0 || v >= target.size()) throw std::invalid_argument("hom image out of range");
    for (int x = 0; x < source.size(); ++x)
        for (int y = 0; y < source.size(); ++y)
            if (image[source.mul(x, y)] != target.mul(image[x], image[y]))
                throw std::invalid_argument("map is not a homomorphism");
    return GroupHom{&source, &target, std::move(image)};
}

namespace {

FiniteGroup make_q8() {
    // Unit part 0..3 = 1,i,j,k with sign bit; unit_mul[u][v] = (unit, sign).
    struct US {
        int u;
        int s;
    };
    static constexpr std::array<std::array<US, 4>, 4> unit_mul{{
        {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
        {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
        {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
        {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
    }};
    std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = (a % 2) ? -1 : 1;
            int ub = b / 2, sb = (b % 2) ? -1 : 1;
            US r = unit_mul[ua][ub];
            int s = sa * sb * r.s;
            table[a][b] = 2 * r.u + (s < 0 ? 1 : 0);
        }
    }
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

FiniteGroup make_d8() {
    // Symmetries of a square: s^i t^j with t s t^{-1} = s^{-1}.
    std::vector<std::string> labels{"1", "s", "s2", "s3", "t", "st", "s2t", "s3t"};
    auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * j; };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i1 + (j1 ? -i2 : i2), j1 ^ j2);
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

void assert_presentation(const FiniteGroup& g, BuiltinName name) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("builtin presentation violated: ") + what);
    };
    if (name == BuiltinName::Q8) {
        const int tau = 1, i = 2, j = 4;  // -1, i, j
        require(g.mul(tau, tau) == g.identity, "tau^2 = 1");
        require(g.mul(i, i) == tau && g.mul(j, j) == tau, "I^2 = J^2 = tau");
        require(g.mul(i, j) == g.mul(tau, g.mul(j, i)), "IJ = tau JI");
        require(subgroup_generated(g, {i, j}).size() == 8, "I,J generate");
    } else if (name == BuiltinName::D8) {
        const int sigma = 1, tau = 4;  // s, t
        require(order_of(g, sigma) == 4 && order_of(g, tau) == 2, "sigma^4 = tau^2 = 1");
        require(g.mul(g.mul(tau, sigma), g.inv(tau)) == g.inv(sigma), "tau sigma tau^-1 = sigma^-1");
        require(subgroup_generated(g, {sigma, tau}).size() == 8, "sigma,tau generate");
    }
}

}  // namespace

FiniteGroup builtin(BuiltinName name) {
    switch (name) {
        case BuiltinName::Z2:
            return FiniteGroup::from_table({"1", "t"}, {{0, 1}, {1, 0}});
        case BuiltinName::Z4: {
            std::vector<std::vector<int>> t(4, std::vector<int>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) t[i][j] = (i + j) % 4;
            return FiniteGroup::from_table({"1", "a", "a2", "a3"}, std::move(t));
        }
        case BuiltinName::Z2xZ2: {
            std::vector<std::vector<int>> t(4, std::vector<int>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
            return FiniteGroup::from_table({"1", "a", "b", "ab"}, std::move(t));
        }
        case BuiltinName::D8: {
            FiniteGroup g = make_d8();
            assert_presentation(g, BuiltinName::D8);
            return g;
        }
        case BuiltinName::Q8: {
            FiniteGroup g = make_q8();
            assert_presentation(g, BuiltinName::Q8);
            return g;
        }
    }
    throw std::invalid_argument("unknown builtin group");
}

FiniteGroup builtin(const std::string& name) {
    if (name == "Z2") return builtin(BuiltinName::Z2);
    if (name == "Z4") return builtin(BuiltinName::Z4);
    if (name == "Z2xZ2") return builtin(BuiltinName::Z2xZ2);
    if (name == "D8") return builtin(BuiltinName::D8);
    if (name == "Q8") return builtin(BuiltinName::Q8);
    throw std::invalid_argument("unknown builtin group: " + name);
}

int order_of(const FiniteGroup& g, int x) {
    int ord = 1;
    int y = x;
    while (y != g.identity) {
        y = g.mul(y, x);
        ++ord;
    }
    return ord;
}

std::map<int, int> order_structure(const FiniteGroup& g) {
    std::map<int, int> hist;
    for (int x = 0; x < g.size(); ++x) ++hist[order_of(g, x)];
    return hist;
}

bool is_abelian(const FiniteGroup& g) {
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y)
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> members;
    for (int x = 0; x < g.size(); ++x) {
        bool central = true;
        for (int y = 0; y < g.size() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) members.push_back(x);
    }
    return make_subgroup(g, std::move(members));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::set<int> comms;
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            comms.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    return subgroup_generated(g, std::vector<int>(comms.begin(), comms.end()));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.size(); ++x)
        for (int m : h.members)
            if (!h.contains(g.conj(x, m))) return false;
    return true;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> coset_of(g.size(), -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < g.size(); ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> coset;
        for (int m : h.members) {
            int y = g.mul(x, m);
            coset_of[y] = static_cast<int>(cosets.size());
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::vector<int> transversal(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> reps;
    for (const auto& coset : left_cosets(g, h)) {
        if (std::binary_search(coset.begin(), coset.end(), g.identity))
            reps.push_back(g.identity);
        else
            reps.push_back(coset.front());
    }
    return reps;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& h) {
    if (!is_normal(g, h)) throw std::invalid_argument("quotient by a non-normal subgroup");
    std::vector<std::vector<int>> cosets = left_cosets(g, h);
    std::vector<int> projection(g.size());
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (int x : cosets[c]) projection[x] = static_cast<int>(c);

    const int m = static_cast<int>(cosets.size());
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& coset : cosets) labels.push_back(g.labels[coset.front()]);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = projection[g.mul(cosets[a].front(), cosets[b].front())];
    return {FiniteGroup::from_table(std::move(labels), std::move(table)), std::move(projection)};
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
    SubgroupAsGroup out;
    out.to_parent = h.members;
    for (std::size_t i = 0; i < h.members.size(); ++i)
        out.from_parent[h.members[i]] = static_cast<int>(i);
    const int m = h.size();
    std::vector<std::string> labels;
    for (int x : h.members) labels.push_back(g.labels[x]);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = out.from_parent.at(g.mul(h.members[a], h.members[b]));
    out.group = FiniteGroup::from_table(std::move(labels), std::move(table));
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.size(); ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int y = 0; y < g.size(); ++y) cls.insert(g.conj(y, x));
        for (int c : cls) seen[c] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

bool is_elementary_abelian(const FiniteGroup& g) {
    if (!is_abelian(g)) return false;
    if (g.size() == 1) return true;
    int p = 0;
    for (int x = 0; x < g.size(); ++x) {
        if (x == g.identity) continue;
        int ord = order_of(g, x);
        if (p == 0) {
            // Must be prime: the order of the first nontrivial element.
            for (int d = 2; d * d <= ord; ++d)
                if (ord % d == 0) return false;
            p = ord;
        } else if (ord != p) {
            return false;
        }
    }
    return true;
}

bool is_extra_special(const FiniteGroup& g) {
    Subgroup derived = derived_subgroup(g);
    Subgroup z = center(g);
    if (derived.members != z.members) return false;
    const int p = derived.size();
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d)
        if (p % d == 0) prime = false;
    if (!prime) return false;
    return is_elementary_abelian(quotient(g, derived).group);
}

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
    const int n = h.size() * k.size();
    if (n > kMaxGroupOrder)
        throw std::runtime_error("direct product exceeds group order cap");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < k.size(); ++b) labels.push_back("(" + h.labels[a] + "," + k.labels[b] + ")");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    auto idx = [&](int a, int b) { return a * k.size() + b; };
    for (int a1 = 0; a1 < h.size(); ++a1)
        for (int b1 = 0; b1 < k.size(); ++b1)
            for (int a2 = 0; a2 < h.size(); ++a2)
                for (int b2 = 0; b2 < k.size(); ++b2)
                    table[idx(a1, b1)][idx(a2, b2)] = idx(h.mul(a1, a2), k.mul(b1, b2));
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

FiniteGroup central_product(const FiniteGroup& h, const FiniteGroup& k, const Subgroup& h1,
                            const Subgroup& k1, const std::vector<int>& theta_image) {
    Subgroup zh = center(h), zk = center(k);
    for (int a : h1.members)
        if (!zh.contains(a)) throw std::invalid_argument("H1 is not central in H");
    for (int b : k1.members)
        if (!zk.contains(b)) throw std::invalid_argument("K1 is not central in K");
    if (theta_image.size() != h1.members.size())
        throw std::invalid_argument("theta must be defined on all of H1");

    std::map<int, int> theta;
    std::set<int> image_set;
    for (std::size_t i = 0; i < h1.members.size(); ++i) {
        if (!k1.contains(theta_image[i]))
            throw std::invalid_argument("theta image outside K1");
        theta[h1.members[i]] = theta_image[i];
        image_set.insert(theta_image[i]);
    }
    if (image_set.size() != k1.members.size())
        throw std::invalid_argument("theta is not a bijection onto K1");
    for (int a : h1.members)
        for (int b : h1.members)
            if (theta.at(h.mul(a, b)) != k.mul(theta.at(a), theta.at(b)))
                throw std::invalid_argument("theta is not an isomorphism");

    FiniteGroup dp = direct_product(h, k);
    std::vector<int> n_members;
    for (int a : h1.members) n_members.push_back(a * k.size() + k.inv(theta.at(a)));
    Subgroup n = make_subgroup(dp, std::move(n_members));
    if (!is_normal(dp, n))
        throw std::logic_error("amalgamated subgroup N is not normal in H x K");
    return quotient(dp, n).group;
}

FiniteGroup central_product_amalgamating(const FiniteGroup& h, const FiniteGroup& k,
                                         const Subgroup& h1, const Subgroup& k1) {
    if (h1.members.size() != k1.members.size())
        throw std::invalid_argument("amalgamated subgroups must have equal order");

    // Enumerate the isomorphisms theta: H1 -> K1 by brute force over
    // identity-fixing bijections.
    std::vector<int> targets;
    for (int b : k1.members)
        if (b != k.identity) targets.push_back(b);
    std::vector<std::vector<int>> thetas;
    std::vector<int> perm(targets);
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<int> image(h1.members.size());
        std::map<int, int> map;
        std::size_t ti = 0;
        for (std::size_t i = 0; i < h1.members.size(); ++i) {
            int a = h1.members[i];
            image[i] = (a == h.identity) ? k.identity : perm[ti++];
            map[a] = image[i];
        }
        bool hom = true;
        for (int a : h1.members)
            for (int b : h1.members)
                if (map.at(h.mul(a, b)) != k.mul(map.at(a), map.at(b))) hom = false;
        if (hom) thetas.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (thetas.empty())
        throw std::invalid_argument("no isomorphism H1 -> K1 exists");
    std::vector<FiniteGroup> builds;
    for (const auto& th : thetas) builds.push_back(central_product(h, k, h1, k1, th));
    for (std::size_t i = 1; i < builds.size(); ++i)
        if (!is_isomorphic(builds[0], builds[i]))
            throw std::logic_error("central products over different theta disagree");
    return std::move(builds.front());
}

FiniteGroup central_product_over_involutions(const FiniteGroup& h, const FiniteGroup& k) {
    auto first_central_involution = [](const FiniteGroup& g) {
        for (int x : center(g).members)
            if (order_of(g, x) == 2) return x;
        throw std::invalid_argument("group has no central involution");
    };
    int zh = first_central_involution(h);
    int zk = first_central_involution(k);
    Subgroup h1 = make_subgroup(h, {h.identity, zh});
    Subgroup k1 = make_subgroup(k, {k.identity, zk});
    std::vector<int> theta(h1.members.size());
    for (std::size_t i = 0; i < h1.members.size(); ++i)
        theta[i] = (h1.members[i] == h.identity) ? k.identity : zk;
    return central_product(h, k, h1, k1, theta);
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace {

struct Fingerprint {
    int order;
    std::map<int, int> orders;
    int center_order;
    int derived_order;
    std::vector<int> class_sizes;
    std::map<int, int> abelianization_orders;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g) {
    Fingerprint f;
    f.order = g.size();
    f.orders = order_structure(g);
    f.center_order = center(g).size();
    Subgroup derived = derived_subgroup(g);
    f.derived_order = derived.size();
    for (const auto& cls : conjugacy_classes(g)) f.class_sizes.push_back(static_cast<int>(cls.size()));
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    f.abelianization_orders = order_structure(quotient(g, derived).group);
    return f;
}

// Per-element invariants used to filter candidate images.
struct ElemKey {
    int order;
    int class_size;
    bool central;

    friend bool operator==(const ElemKey&, const ElemKey&) = default;
};

std::vector<ElemKey> element_keys(const FiniteGroup& g) {
    std::vector<ElemKey> keys(g.size());
    Subgroup z = center(g);
    for (const auto& cls : conjugacy_classes(g))
        for (int x : cls)
            keys[x] = ElemKey{order_of(g, x), static_cast<int>(cls.size()), z.contains(x)};
    return keys;
}

// Extends the partial map phi (a bijective homomorphism on the subgroup
// generated by its domain) with g -> h, closing under products and
// reporting conflicts.  `known` lists domain elements in closure order.
bool extend(const FiniteGroup& G, const FiniteGroup& H, std::vector<int>& phi,
            std::vector<int>& used, std::vector<int>& known, int g, int h) {
    std::size_t frontier = known.size();
    auto assign = [&](int x, int y) {
        if (phi[x] >= 0) return phi[x] == y;
        if (used[y] >= 0) return false;
        phi[x] = y;
        used[y] = x;
        known.push_back(x);
        return true;
    };
    if (!assign(g, h)) return phi[g] == h;
    for (std::size_t i = frontier; i < known.size(); ++i) {
        int x = known[i];
        for (std::size_t j = 0; j < known.size(); ++j) {
            int y = known[j];
            if (!assign(G.mul(x, y), H.mul(phi[x], phi[y]))) return false;
            if (!assign(G.mul(y, x), H.mul(phi[y], phi[x]))) return false;
            if (i == j) break;  // pairs (x, y) with y already processed suffice
        }
    }
    return true;
}

bool search(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& gens,
            const std::vector<ElemKey>& gkeys, const std::vector<ElemKey>& hkeys,
            std::size_t level, std::vector<int>& phi, std::vector<int>& used,
            std::vector<int>& known) {
    if (level == gens.size()) return static_cast<int>(known.size()) == G.size();
    int g = gens[level];
    for (int h = 0; h < H.size(); ++h) {
        if (!(gkeys[g] == hkeys[h])) continue;
        std::vector<int> phi_copy = phi, used_copy = used, known_copy = known;
        if (extend(G, H, phi_copy, used_copy, known_copy, g, h) &&
            search(G, H, gens, gkeys, hkeys, level + 1, phi_copy, used_copy, known_copy)) {
            phi = std::move(phi_copy);
            used = std::move(used_copy);
            known = std::move(known_copy);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.size() != h.size()) return std::nullopt;
    if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;

    std::vector<int> gens = generating_set(g.table, g.identity);
    std::vector<ElemKey> gkeys = element_keys(g), hkeys = element_keys(h);

    std::vector<int> phi(g.size(), -1), used(h.size(), -1), known;
    phi[g.identity] = h.identity;
    used[h.identity] = g.identity;
    known.push_back(g.identity);
    if (!search(g, h, gens, gkeys, hkeys, 0, phi, used, known)) return std::nullopt;
    return make_hom(g, h, std::move(phi));
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    return find_isomorphism(g, h).has_value();
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{g.identity};
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> current = queue[i];
        for (int x = 0; x < g.size(); ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<int> gens = current;
            gens.push_back(x);
            Subgroup bigger = subgroup_generated(g, gens);
            if (seen.insert(bigger.members).second) queue.push_back(bigger.members);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(queue.size());
    for (auto& members : queue) out.push_back(Subgroup{&g, std::move(members)});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.members.size() != b.members.size() ? a.members.size() < b.members.size()
                                                    : a.members < b.members;
    });
    return out;
}

}  // namespace cliffga
