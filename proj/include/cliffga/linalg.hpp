#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cliffga/rational.hpp"

namespace cliffga {

// Dense matrix over exact rationals.  All isomorphism and kernel claims in
// this project are exact statements, so there is no tolerance anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void append_row(const std::vector<Rational>& r);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix mat;               // canonical reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

// Fraction-free forward elimination (Bareiss, after clearing row
// denominators) followed by canonical normalization.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of { x : A x = 0 }, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

// Unique x with A x = b when the system is consistent and the pivot columns
// determine every coordinate used; nullopt when inconsistent.  Free
// coordinates are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Row spaces compared as sets (exact equality of canonical RREFs).
bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b);

bool in_row_span(const RationalMatrix& basis, const std::vector<Rational>& v);

}  // namespace cliffga
