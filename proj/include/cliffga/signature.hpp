#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffga {

// Hard limit for blade arithmetic: masks live in one 64-bit word.
inline constexpr int kMaxBladeDim = 63;
// Default cap wherever a full group or table enumeration is requested.
inline constexpr int kMaxEnumDim = 8;
// Closure / multiplication-table cap.
inline constexpr int kMaxGroupOrder = 512;

// Metric signature of Cl(p,q,r): p generators square to +1, q to -1, r to 0.
// Degenerate generators occupy the top index range p+q+1 .. n.
struct Signature {
    int p = 0;
    int q = 0;
    int r = 0;

    Signature() = default;
    Signature(int p_, int q_, int r_ = 0) : p(p_), q(q_), r(r_) {
        if (p < 0 || q < 0 || r < 0)
            throw std::invalid_argument("signature counts must be non-negative");
        if (n() > kMaxBladeDim)
            throw std::invalid_argument("signature dimension exceeds blade arithmetic cap of 63");
    }

    int n() const { return p + q + r; }
    bool degenerate() const { return r > 0; }

    // Bit i-1 holds generator e_i.
    std::uint64_t positive_mask() const { return p == 0 ? 0 : (~std::uint64_t{0} >> (64 - p)); }
    std::uint64_t full_mask() const { return n() == 0 ? 0 : (~std::uint64_t{0} >> (64 - n())); }
    std::uint64_t degenerate_mask() const {
        return r == 0 ? 0 : (((~std::uint64_t{0}) >> (64 - r)) << (p + q));
    }

    friend bool operator==(const Signature&, const Signature&) = default;

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
    }
};

}  // namespace cliffga
