#pragma once

#include "grassmap/matrix.hpp"
#include "grassmap/rng.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace grassmap {

/// Coordinate vector of an algebra element in the fixed basis e_0..e_{n-1}.
using AlgebraElement = std::vector<Scalar>;

/// Signals that a randomized sampler ran out of attempts. At the default
/// modulus this indicates a structural obstruction (or a bug), not bad luck.
class RetryExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite-dimensional associative unital algebra over F_p, given by
/// structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
/// Associativity and the unit laws are verified exhaustively on basis
/// vectors at construction. The monogenic path F_p[t]/(f) additionally
/// records the defining polynomial and uses the power basis 1, t, ..,
/// t^{n-1}, so t is basis vector e_1 (when n > 1).
class Algebra {
public:
    static Algebra from_structure_constants(PrimeField field,
                                            const std::vector<std::vector<std::vector<Scalar>>>& c,
                                            const std::vector<Scalar>& unit);

    /// Builds F_p[t]/(f) for monic f of degree n >= 1 given by its low
    /// coefficients in ascending order (constant term first; the leading 1
    /// is implied). Rejects non-separable f, i.e. gcd(f, f') != 1.
    static Algebra etale_from_poly(PrimeField field, const std::vector<Scalar>& low_coeffs);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    const AlgebraElement& unit() const noexcept { return unit_; }
    bool is_monogenic() const noexcept { return monogenic_; }
    /// Low coefficients of the defining polynomial (monogenic algebras only).
    const std::vector<Scalar>& min_poly() const;

    Scalar structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    AlgebraElement basis_element(std::size_t i) const;

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;

    /// Column j holds the coordinates of a * e_j.
    Matrix left_mul_matrix(const AlgebraElement& a) const;
    /// Column j holds the coordinates of e_j * a.
    Matrix right_mul_matrix(const AlgebraElement& a) const;

    /// Two-sided inverse, or nullopt for non-units (zero divisors included).
    std::optional<AlgebraElement> invert(const AlgebraElement& a) const;

    /// Matrix of phi |-> (x |-> phi(x a)) on the dual basis: the left
    /// A-module action on A*, i.e. transpose(right_mul_matrix(a)).
    /// Satisfies M(ab) = M(a) M(b).
    Matrix dual_module_action_matrix(const AlgebraElement& a) const;

    /// Matrix of the GL_1(A) action phi |-> (x |-> phi(a^{-1} x)) on A*:
    /// transpose(left_mul_matrix(a^{-1})). Throws for non-invertible a.
    Matrix gl1_dual_action_matrix(const AlgebraElement& a) const;

    AlgebraElement random_element(Rng& rng) const;
    AlgebraElement random_invertible(Rng& rng, int budget = 64) const;

    bool operator==(const Algebra&) const = default;

private:
    Algebra(PrimeField field, std::size_t n, std::vector<Scalar> c, AlgebraElement unit,
            bool monogenic, std::vector<Scalar> poly);
    void validate() const;

    PrimeField field_;
    std::size_t n_;
    std::vector<Scalar> c_; // flattened n^3 structure constants
    AlgebraElement unit_;
    bool monogenic_;
    std::vector<Scalar> poly_; // low coefficients when monogenic
};

} // namespace grassmap
