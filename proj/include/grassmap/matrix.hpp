#pragma once

#include "grassmap/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace grassmap {

/// Dense row-major matrix over a prime field. Degenerate shapes (0 x n,
/// n x 0) are legal. Immutable in spirit: every operation returns a new
/// matrix; the mutable accessors exist for construction code only.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField field, std::size_t n);
    /// Builds from explicit rows, reducing every entry mod p.
    static Matrix from_rows(PrimeField field,
                            const std::vector<std::vector<Scalar>>& rows_in,
                            std::size_t cols_hint = 0);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const {
        return {e_.data() + i * cols_, cols_};
    }

    Matrix mul(const Matrix& other) const;
    Matrix transpose() const;
    /// Stacks other below this matrix (column counts must match).
    Matrix vstack(const Matrix& other) const;
    /// First k rows.
    Matrix top_rows(std::size_t k) const;
    /// Matrix-vector product m * v (v of length cols).
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

    bool is_zero() const noexcept;
    bool operator==(const Matrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> e_;
};

/// Reduced row echelon form of a matrix, with the same shape as the input:
/// pivot columns strictly increasing, pivot entries 1, zeros above and below
/// every pivot, zero rows collected at the bottom. Two matrices with equal
/// row spaces and equal row counts reduce to the identical EchelonForm.
struct EchelonForm {
    Matrix mat;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
    /// The first rank() rows: the canonical basis of the row space.
    Matrix basis() const { return mat.top_rows(rank()); }

    bool operator==(const EchelonForm&) const = default;
};

EchelonForm rref(const Matrix& m);

/// Canonical echelon basis of { v : m v = 0 }, one basis vector per row;
/// row count = cols(m) - rank(m). The kernel of a 0 x n matrix is the
/// full identity basis.
Matrix kernel(const Matrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> rhs);

} // namespace grassmap
