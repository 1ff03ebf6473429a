#pragma once

#include "grassmap/algebra.hpp"

namespace grassmap {

/// Which vector space a subspace lives in: the algebra A (primal) or its
/// dual A* (dual). The pairing <A, A*> is the coordinate dot product in the
/// fixed basis, so annihilators are plain kernel computations.
enum class Side { primal, dual };

/// A subspace of A or A*, stored as its canonical reduced-echelon basis
/// (one basis vector per row, zero rows trimmed). Two subspaces are equal
/// iff side, ambient dimension and echelon basis coincide bit for bit.
class Subspace {
public:
    /// Canonicalizes arbitrary spanning rows (rref + trim).
    Subspace(Side side, Matrix spanning_rows);

    static Subspace zero(PrimeField field, Side side, std::size_t ambient);
    static Subspace full(PrimeField field, Side side, std::size_t ambient);
    /// Span of the given coordinate vectors.
    static Subspace span(PrimeField field, Side side, std::size_t ambient,
                         const std::vector<std::vector<Scalar>>& vectors);

    Side side() const noexcept { return side_; }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const PrimeField& field() const noexcept { return basis_.field(); }
    /// dim() x ambient() matrix in reduced echelon form.
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    Side side_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

/// Functionals vanishing on S (or, for dual S, vectors killed by S).
/// Swaps sides; dim = ambient - dim S.
Subspace annihilator(const Subspace& s);

/// Module product of W by the primal subspace U: the span of all products
/// w.u. For primal W this is W.U = span{ w * u } (right multiplication);
/// for dual W it is U.W = span{ u.phi } with (u.phi)(x) = phi(x u). These
/// two readings are adjoint: <Y.U, X> = 0 iff <Y, U.X> = 0.
Subspace module_product(const Algebra& alg, const Subspace& u_sub, const Subspace& w);

/// The GL_1(A) translation a.S: left multiplication on A, the action
/// (a.phi)(x) = phi(a^{-1} x) on A*. Throws for non-invertible a.
Subspace gl1_translate(const Algebra& alg, const AlgebraElement& a, const Subspace& s);

/// Image of S under an invertible ambient map, same side.
Subspace apply_matrix(const Matrix& m, const Subspace& s);

Subspace random_subspace(PrimeField field, Side side, std::size_t ambient,
                         std::size_t dim, Rng& rng, int budget = 64);
/// Uniformly random dim-dimensional subspace of w.
Subspace random_subspace_in(const Subspace& w, std::size_t dim, Rng& rng, int budget = 64);

/// The subalgebra { a in A : a.E <= E } for primal E, computed as the
/// kernel of a |-> (a e_i mod E)_i. Always contains span(unit); for a
/// generic proper E in an etale algebra it is exactly span(unit).
Subspace stabilizer_subalgebra(const Algebra& alg, const Subspace& e);

} // namespace grassmap
