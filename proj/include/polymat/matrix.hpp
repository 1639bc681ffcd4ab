#pragma once

#include <cstddef>
#include <vector>

#include "polymat/poly.hpp"

namespace polymat {

// Dense matrix over a polynomial ring. All entries share one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);  // zero-filled
    static PolyMatrix identity(RingPtr ring, std::size_t n);
    static PolyMatrix diagonal(RingPtr ring, std::size_t n,
                               const std::vector<Poly>& diag);
    static PolyMatrix from_rows(RingPtr ring,
                                std::vector<std::vector<Poly>> rows);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Poly& at(std::size_t i, std::size_t j) const;
    Poly& at(std::size_t i, std::size_t j);

    std::vector<Poly> row(std::size_t i) const;
    std::vector<Poly> col(std::size_t j) const;
    void set_row(std::size_t i, const std::vector<Poly>& values);
    void set_col(std::size_t j, const std::vector<Poly>& values);

    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    PolyMatrix operator*(const PolyMatrix& other) const;
    PolyMatrix scaled(const Poly& factor) const;
    bool operator==(const PolyMatrix& other) const;
    bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_identity() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;  // row-major
};

// Exact determinant by cofactor expansion memoized over column subsets.
// Throws DimensionError for non-square input.
Poly determinant(const PolyMatrix& m);

// Row and column index sets (each strictly increasing) naming one r x r minor.
struct MinorIndex {
    std::vector<std::size_t> row_idx;
    std::vector<std::size_t> col_idx;
};

// All r x r minors in lexicographic order of (row set, column set), their
// monic GCD d_r, and the reduced minors (minor / d_r). For a zero minor list
// the GCD is 0 and the reduced minors are 0.
struct MinorReport {
    std::size_t order = 0;
    std::vector<MinorIndex> index;
    std::vector<Poly> minors;
    Poly gcd;
    std::vector<Poly> reduced;
};

MinorReport minors(const PolyMatrix& m, std::size_t r);

// Largest r with a nonzero r x r minor; 0 for the zero matrix.
std::size_t rank(const PolyMatrix& m);

// Inverse of a matrix whose determinant is a nonzero constant, via the
// adjugate. Throws DomainError otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

// Strictly increasing k-subsets of {0..n-1} in lexicographic order; empty
// when k > n, the single empty subset when k == 0.
std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                         std::size_t k);

}  // namespace polymat
