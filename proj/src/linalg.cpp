#include "cliffga/linalg.hpp"

#include <stdexcept>

namespace cliffga {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void RationalMatrix::append_row(const std::vector<Rational>& r) {
    if (cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RrefResult rref(const RationalMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();

    // Clear denominators row by row; row scaling changes neither the row
    // space nor the kernel.
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < nc; ++j) l = lcm(l, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = numerator(m.at(i, j)) * (l / denominator(m.at(i, j)));
    }

    // Bareiss forward elimination: intermediate entries stay integral and
    // each division below is exact.
    std::vector<std::size_t> pivots;
    Int prev = 1;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < nc && prow < nr; ++col) {
        std::size_t sel = prow;
        while (sel < nr && a[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(a[sel], a[prow]);
        const Int pivot = a[prow][col];
        for (std::size_t i = prow + 1; i < nr; ++i) {
            const Int factor = a[i][col];
            for (std::size_t j = col; j < nc; ++j)
                a[i][j] = (a[i][j] * pivot - factor * a[prow][j]) / prev;
        }
        prev = pivot;
        pivots.push_back(col);
        ++prow;
    }
    const std::size_t rk = prow;

    // Normalize to the canonical RREF with rational back-substitution.
    // cpp_rational rejects negative denominators, so fold the sign in.
    RationalMatrix out(nr, nc);
    for (std::size_t i = 0; i < rk; ++i) {
        const bool flip = a[i][pivots[i]] < 0;
        const Int den = flip ? Int(-a[i][pivots[i]]) : a[i][pivots[i]];
        for (std::size_t j = 0; j < nc; ++j)
            out.at(i, j) = Rational(flip ? Int(-a[i][j]) : a[i][j], den);
    }
    for (std::size_t i = rk; i-- > 0;) {
        for (std::size_t above = 0; above < i; ++above) {
            const Rational f = out.at(above, pivots[i]);
            if (f == 0) continue;
            for (std::size_t j = pivots[i]; j < nc; ++j)
                out.at(above, j) -= f * out.at(i, j);
        }
    }
    return {std::move(out), std::move(pivots), rk};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
    RrefResult r = rref(a);
    const std::size_t nc = a.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivots)
        if (c == a.cols()) return std::nullopt;  // inconsistent system

    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.mat.at(i, a.cols());
    return x;
}

bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) return false;
    RrefResult ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (std::size_t i = 0; i < ra.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ra.mat.at(i, j) != rb.mat.at(i, j)) return false;
    return true;
}

bool in_row_span(const RationalMatrix& basis, const std::vector<Rational>& v) {
    RationalMatrix with = basis;
    with.append_row(v);
    return rank(with) == rank(basis);
}

}  // namespace cliffga
