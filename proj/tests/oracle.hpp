#pragma once

// Independent references the production kernel is checked against.  These
// count adjacent transpositions directly and never touch the Walsh/Gray
// machinery; keep it that way.

#include <cstdint>
#include <vector>

#include "cliffga/signature.hpp"

namespace cliffga::testing {

struct OracleProduct {
    int coeff = 0;  // -1, 0, +1
    std::uint64_t mask = 0;
};

// e_I e_J by brute force: concatenate the generator index lists, bubble
// adjacent transpositions until sorted (factor -1 each), then contract the
// repeated generators with the metric (+1, -1, or 0).
inline OracleProduct oracle_cmul(std::uint64_t a, std::uint64_t b, const Signature& sig) {
    std::vector<int> seq;
    for (int i = 1; i <= sig.n(); ++i)
        if (a & (std::uint64_t{1} << (i - 1))) seq.push_back(i);
    for (int i = 1; i <= sig.n(); ++i)
        if (b & (std::uint64_t{1} << (i - 1))) seq.push_back(i);

    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] > seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                sign = -sign;
                moved = true;
            }
        }
    }

    std::vector<int> survivors;
    for (std::size_t i = 0; i < seq.size();) {
        if (i + 1 < seq.size() && seq[i] == seq[i + 1]) {
            int idx = seq[i];
            if (idx <= sig.p)
                ;  // epsilon = +1
            else if (idx <= sig.p + sig.q)
                sign = -sign;
            else
                return {0, 0};  // degenerate generator squares to 0
            i += 2;
        } else {
            survivors.push_back(seq[i]);
            ++i;
        }
    }

    std::uint64_t mask = 0;
    for (int i : survivors) mask |= std::uint64_t{1} << (i - 1);
    return {sign, mask};
}

// Exterior product reference: zero on shared generators, otherwise the
// parity of crossings between the two sorted index lists.
inline OracleProduct oracle_wedge(std::uint64_t a, std::uint64_t b, int n) {
    if (a & b) return {0, 0};
    int crossings = 0;
    for (int i = 1; i <= n; ++i) {
        if (!(a & (std::uint64_t{1} << (i - 1)))) continue;
        for (int j = 1; j < i; ++j)
            if (b & (std::uint64_t{1} << (j - 1))) ++crossings;
    }
    return {(crossings & 1) ? -1 : 1, a | b};
}

}  // namespace cliffga::testing
