#include "grassmap/matrix.hpp"

#include <stdexcept>

namespace grassmap {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<Scalar>>& rows_in,
                         std::size_t cols_hint) {
    std::size_t cols = cols_hint;
    if (!rows_in.empty()) cols = rows_in.front().size();
    Matrix m(field, rows_in.size(), cols);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        if (rows_in[i].size() != cols)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = field.reduce(rows_in[i][j]);
    }
    return m;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_ || !(field_ == other.field_))
        throw std::invalid_argument("shape or field mismatch in matrix product");
    Matrix r(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, other.at(k, j)));
            }
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (cols_ != other.cols_ || !(field_ == other.field_))
        throw std::invalid_argument("shape or field mismatch in vstack");
    Matrix r(field_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
}

Matrix Matrix::top_rows(std::size_t k) const {
    if (k > rows_) throw std::invalid_argument("top_rows beyond row count");
    Matrix r(field_, k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = field_.add(acc, field_.mul(at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

bool Matrix::is_zero() const noexcept {
    for (Scalar x : e_)
        if (x != 0) return false;
    return true;
}

EchelonForm rref(const Matrix& m) {
    Matrix r = m;
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(sel, j), r.at(row, j));
        }
        Scalar piv_inv = f.inv(r.at(row, col));
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(row, j) = f.mul(r.at(row, j), piv_inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            Scalar c = r.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

Matrix kernel(const Matrix& m) {
    EchelonForm e = rref(m);
    const PrimeField& f = m.field();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    Matrix basis(f, n - e.rank(), n);
    std::size_t out = 0;
    for (std::size_t jfree = 0; jfree < n; ++jfree) {
        if (is_pivot[jfree]) continue;
        basis.at(out, jfree) = 1;
        for (std::size_t i = 0; i < e.rank(); ++i)
            basis.at(out, e.pivots[i]) = f.neg(e.mat.at(i, jfree));
        ++out;
    }
    // The standard basis above need not be in echelon order; canonicalize.
    return rref(basis).basis();
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = m.field().reduce(rhs[i]);
    }
    EchelonForm e = rref(aug);
    std::vector<Scalar> x(m.cols(), 0);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt; // pivot in rhs column
        x[e.pivots[i]] = e.mat.at(i, m.cols());
    }
    return x;
}

} // namespace grassmap
