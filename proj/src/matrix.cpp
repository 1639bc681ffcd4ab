#include "polymat/matrix.hpp"

#include <bit>
#include <optional>
#include <sstream>

namespace polymat {
namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("a matrix needs at least one row and one column");
}

}  // namespace

// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                         std::size_t k) {
    if (k > n) return {};
    if (k == 0) return {{}};
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        bool done = false;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) break;
            if (i == 0) done = true;
        }
        if (done) return out;
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows_ * cols_, Poly::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(ring);
    return m;
}

PolyMatrix PolyMatrix::diagonal(RingPtr ring, std::size_t n,
                                const std::vector<Poly>& diag) {
    if (diag.size() != n)
        throw DimensionError("diagonal length does not match the matrix size");
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = diag[i];
    return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring,
                                 std::vector<std::vector<Poly>> rows) {
    check_shape(rows.size(), rows.empty() ? 0 : rows[0].size());
    PolyMatrix m(ring, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionError("rows have inconsistent lengths");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (!rows[i][j].ring()->same_as(*ring))
                throw RingMismatchError("matrix entry lives in a different ring");
            m.at(i, j) = std::move(rows[i][j]);
        }
    }
    return m;
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return data_[i * cols_ + j];
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return data_[i * cols_ + j];
}

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
    std::vector<Poly> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

std::vector<Poly> PolyMatrix::col(std::size_t j) const {
    std::vector<Poly> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

void PolyMatrix::set_row(std::size_t i, const std::vector<Poly>& values) {
    if (values.size() != cols_) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

void PolyMatrix::set_col(std::size_t j, const std::vector<Poly>& values) {
    if (values.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = values[i];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    check_shape(row_idx.size(), col_idx.size());
    PolyMatrix m(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix addition shape mismatch");
    PolyMatrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        m.data_[k] = data_[k] + other.data_[k];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix subtraction shape mismatch");
    PolyMatrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        m.data_[k] = data_[k] - other.data_[k];
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matrix product shape mismatch");
    PolyMatrix m(ring_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Poly acc = Poly::zero(ring_);
            for (std::size_t k = 0; k < cols_; ++k)
                acc += at(i, k) * other.at(k, j);
            m.at(i, j) = std::move(acc);
        }
    return m;
}

PolyMatrix PolyMatrix::scaled(const Poly& factor) const {
    PolyMatrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * factor;
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != other.data_[k]) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > 16) throw DomainError("determinant size exceeds the supported bound");
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<std::optional<Poly>> memo(std::size_t{1} << n);
    // det over rows [n - popcount(mask), n) and the columns in `mask`.
    auto rec = [&](auto&& self, std::uint32_t mask) -> const Poly& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        if (mask == 0) {
            slot = Poly::one(m.ring());
            return *slot;
        }
        const std::size_t row =
            n - static_cast<std::size_t>(std::popcount(mask));
        Poly acc = Poly::zero(m.ring());
        bool negative = false;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t bit = 1u << j;
            if (!(mask & bit)) continue;
            const Poly& entry = m.at(row, j);
            if (!entry.is_zero()) {
                const Poly& sub = self(self, mask & ~bit);
                Poly term = entry * sub;
                acc += negative ? -term : term;
            }
            negative = !negative;
        }
        slot = std::move(acc);
        return *slot;
    };
    return rec(rec, full);
}

MinorReport minors(const PolyMatrix& m, std::size_t r) {
    if (r < 1 || r > std::min(m.rows(), m.cols()))
        throw DimensionError("minor order out of range");
    MinorReport report;
    report.order = r;
    for (const auto& rows : index_combinations(m.rows(), r))
        for (const auto& cols : index_combinations(m.cols(), r)) {
            report.index.push_back({rows, cols});
            report.minors.push_back(determinant(m.submatrix(rows, cols)));
        }
    report.gcd = gcd_many(report.minors);
    report.reduced.reserve(report.minors.size());
    for (const auto& minor : report.minors) {
        if (report.gcd.is_zero())
            report.reduced.push_back(Poly::zero(m.ring()));
        else
            report.reduced.push_back(minor.exact_divide(report.gcd));
    }
    return report;
}

std::size_t rank(const PolyMatrix& m) {
    for (std::size_t r = std::min(m.rows(), m.cols()); r >= 1; --r) {
        for (const auto& rows : index_combinations(m.rows(), r))
            for (const auto& cols : index_combinations(m.cols(), r))
                if (!determinant(m.submatrix(rows, cols)).is_zero()) return r;
    }
    return 0;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
    const Poly det = determinant(m);
    if (!det.is_constant() || det.is_zero())
        throw DomainError("matrix is not unimodular; determinant: " + det.str());
    const Rational inv_det = 1 / det.constant_value();
    const std::size_t n = m.rows();
    PolyMatrix out(m.ring(), n, n);
    if (n == 1) {
        out.at(0, 0) = Poly::constant(m.ring(), inv_det);
    } else {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::size_t> rows, cols;
                for (const std::size_t k : all)
                    if (k != i) rows.push_back(k);
                for (const std::size_t k : all)
                    if (k != j) cols.push_back(k);
                Poly cof = determinant(m.submatrix(rows, cols));
                if ((i + j) % 2 == 1) cof = -cof;
                out.at(j, i) = cof * inv_det;  // adjugate transposes indices
            }
    }
    if (!(m * out).is_identity())
        throw InternalError("inverse verification failed");
    return out;
}

}  // namespace polymat
