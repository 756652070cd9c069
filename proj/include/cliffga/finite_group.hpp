#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffga/signature.hpp"

namespace cliffga {

// Small finite group given by an explicit multiplication table.  The table
// is validated on construction: Latin square, two-sided identity and
// inverses, associativity (Light's test over a generating set).
struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;  // table[i][j] = index of labels[i] * labels[j]
    int identity = -1;
    std::vector<int> inverse;

    int size() const { return static_cast<int>(labels.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    static FiniteGroup from_table(std::vector<std::string> labels,
                                  std::vector<std::vector<int>> table);

    // CSV: header row of labels, then |G| rows of product indices.
    static FiniteGroup from_csv(std::istream& in);
    void to_csv(std::ostream& out) const;
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
};

// Validates closure, identity and inverses.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<int> image;  // image[i] = index in target
};

// Checks image(xy) = image(x) image(y) on all pairs.
GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<int> image);

enum class BuiltinName { Z2, Z4, Z2xZ2, D8, Q8 };

// Concrete models: cyclic tables, D8 from the symmetries of a square,
// Q8 from the signed quaternion units.  The defining presentation
// relations are asserted to hold and to generate.
FiniteGroup builtin(BuiltinName name);
FiniteGroup builtin(const std::string& name);

// Breadth-first closure of the seeds under `multiply`, with deterministic
// element order (insertion order from sorted seeds).  Fails if the closure
// exceeds `cap`.
template <typename T, typename Mul, typename Label>
FiniteGroup close_under_product(std::vector<T> seeds, Mul&& multiply, Label&& label,
                                int cap = kMaxGroupOrder) {
    if (seeds.empty()) throw std::invalid_argument("close_under_product: no seeds");
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<T> elems;
    std::map<T, int> index;
    for (const T& s : seeds) {
        index.emplace(s, static_cast<int>(elems.size()));
        elems.push_back(s);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            T prod = multiply(elems[i], elems[j]);
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                if (static_cast<int>(elems.size()) > cap)
                    throw std::runtime_error("close_under_product: closure exceeds cap of " +
                                             std::to_string(cap));
            }
        }
    }

    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (const T& e : elems) labels.push_back(label(e));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            table[i][j] = index.at(multiply(elems[i], elems[j]));
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

int order_of(const FiniteGroup& g, int x);
std::map<int, int> order_structure(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h);
// One representative per left coset, identity representing H itself.
std::vector<int> transversal(const FiniteGroup& g, const Subgroup& h);

struct QuotientResult {
    FiniteGroup group;
    std::vector<int> projection;  // parent element index -> coset index
};
QuotientResult quotient(const FiniteGroup& g, const Subgroup& h);

// The subgroup as a group in its own right, with index maps in and out.
struct SubgroupAsGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::map<int, int> from_parent;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

bool is_elementary_abelian(const FiniteGroup& g);
bool is_extra_special(const FiniteGroup& g);

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);

// External central product (H x K)/N with N = {(h, theta(h)^{-1}) : h in H1};
// theta maps H1.members[i] to theta_image[i] in K1.
FiniteGroup central_product(const FiniteGroup& h, const FiniteGroup& k, const Subgroup& h1,
                            const Subgroup& k1, const std::vector<int>& theta_image);

// Tries every isomorphism theta: H1 -> K1, asserts all resulting central
// products are isomorphic, and returns the first construction.
FiniteGroup central_product_amalgamating(const FiniteGroup& h, const FiniteGroup& k,
                                         const Subgroup& h1, const Subgroup& k1);

// Amalgamates one deterministically chosen central involution on each side.
FiniteGroup central_product_over_involutions(const FiniteGroup& h, const FiniteGroup& k);

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);
std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

// All subgroups, intended for |G| <= 32.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace cliffga
