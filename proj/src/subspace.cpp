#include "grassmap/subspace.hpp"

namespace grassmap {

namespace {

void require_compatible(const Subspace& s, const Subspace& t) {
    if (s.side() != t.side()) throw std::invalid_argument("side mismatch");
    if (s.ambient() != t.ambient() || !(s.field() == t.field()))
        throw std::invalid_argument("ambient mismatch");
}

} // namespace

Subspace::Subspace(Side side, Matrix spanning_rows)
    : side_(side), basis_(spanning_rows.field(), 0, 0) {
    EchelonForm e = rref(spanning_rows);
    pivots_ = e.pivots;
    basis_ = e.basis();
}

Subspace Subspace::zero(PrimeField field, Side side, std::size_t ambient) {
    return Subspace(side, Matrix(field, 0, ambient));
}

Subspace Subspace::full(PrimeField field, Side side, std::size_t ambient) {
    return Subspace(side, Matrix::identity(field, ambient));
}

Subspace Subspace::span(PrimeField field, Side side, std::size_t ambient,
                        const std::vector<std::vector<Scalar>>& vectors) {
    return Subspace(side, Matrix::from_rows(field, vectors, ambient));
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> r(v.begin(), v.end());
    const PrimeField& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient(); ++j)
            r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    for (Scalar x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    require_compatible(s, t);
    return Subspace(s.side(), s.basis().vstack(t.basis()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    require_compatible(s, t);
    // (S cap T) = (S^perp + T^perp)^perp under the coordinate pairing.
    Matrix stacked = kernel(s.basis()).vstack(kernel(t.basis()));
    return Subspace(s.side(), kernel(stacked));
}

Subspace annihilator(const Subspace& s) {
    Side flip = s.side() == Side::primal ? Side::dual : Side::primal;
    return Subspace(flip, kernel(s.basis()));
}

Subspace module_product(const Algebra& alg, const Subspace& u_sub, const Subspace& w) {
    if (u_sub.side() != Side::primal)
        throw std::invalid_argument("module product requires a primal multiplier subspace");
    if (u_sub.ambient() != alg.dim() || w.ambient() != alg.dim())
        throw std::invalid_argument("ambient mismatch");
    Matrix rows(alg.field(), u_sub.dim() * w.dim(), alg.dim());
    std::size_t out = 0;
    for (std::size_t i = 0; i < u_sub.dim(); ++i) {
        AlgebraElement u(u_sub.basis().row(i).begin(), u_sub.basis().row(i).end());
        Matrix action = alg.right_mul_matrix(u);
        if (w.side() == Side::dual) action = action.transpose();
        for (std::size_t j = 0; j < w.dim(); ++j) {
            std::vector<Scalar> prod = action.apply(w.basis().row(j));
            for (std::size_t k = 0; k < alg.dim(); ++k) rows.at(out, k) = prod[k];
            ++out;
        }
    }
    return Subspace(w.side(), std::move(rows));
}

Subspace gl1_translate(const Algebra& alg, const AlgebraElement& a, const Subspace& s) {
    if (s.ambient() != alg.dim()) throw std::invalid_argument("ambient mismatch");
    auto ai = alg.invert(a);
    if (!ai) throw std::invalid_argument("not invertible");
    Matrix m = s.side() == Side::primal ? alg.left_mul_matrix(a)
                                        : alg.left_mul_matrix(*ai).transpose();
    return apply_matrix(m, s);
}

Subspace apply_matrix(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw std::invalid_argument("shape mismatch");
    Matrix rows(s.field(), s.dim(), m.rows());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<Scalar> img = m.apply(s.basis().row(i));
        for (std::size_t k = 0; k < img.size(); ++k) rows.at(i, k) = img[k];
    }
    return Subspace(s.side(), std::move(rows));
}

Subspace random_subspace(PrimeField field, Side side, std::size_t ambient,
                         std::size_t dim, Rng& rng, int budget) {
    if (dim > ambient) throw std::invalid_argument("dimension exceeds ambient");
    for (int t = 0; t < budget; ++t) {
        Matrix rows(field, dim, ambient);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = rng.element(field);
        Subspace s(side, std::move(rows));
        if (s.dim() == dim) return s;
    }
    throw RetryExhausted("retry budget exhausted (random subspace)");
}

Subspace random_subspace_in(const Subspace& w, std::size_t dim, Rng& rng, int budget) {
    if (dim > w.dim()) throw std::invalid_argument("dimension exceeds container");
    const PrimeField& f = w.field();
    for (int t = 0; t < budget; ++t) {
        Matrix coeff(f, dim, w.dim());
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < w.dim(); ++j) coeff.at(i, j) = rng.element(f);
        Subspace s(w.side(), coeff.mul(w.basis()));
        if (s.dim() == dim) return s;
    }
    throw RetryExhausted("retry budget exhausted (random subspace inside container)");
}

Subspace stabilizer_subalgebra(const Algebra& alg, const Subspace& e) {
    if (e.side() != Side::primal) throw std::invalid_argument("stabilizer needs a primal subspace");
    if (e.ambient() != alg.dim()) throw std::invalid_argument("ambient mismatch");
    Subspace ann = annihilator(e);
    // a stabilizes E iff phi(a * e_j) = 0 for every basis e_j of E and every
    // phi vanishing on E; a * e_j = right_mul_matrix(e_j) a, so each
    // constraint row is transpose(right_mul_matrix(e_j)) phi.
    Matrix constraints(alg.field(), e.dim() * ann.dim(), alg.dim());
    std::size_t out = 0;
    for (std::size_t j = 0; j < e.dim(); ++j) {
        AlgebraElement ej(e.basis().row(j).begin(), e.basis().row(j).end());
        Matrix rt = alg.right_mul_matrix(ej).transpose();
        for (std::size_t i = 0; i < ann.dim(); ++i) {
            std::vector<Scalar> row = rt.apply(ann.basis().row(i));
            for (std::size_t k = 0; k < alg.dim(); ++k) constraints.at(out, k) = row[k];
            ++out;
        }
    }
    return Subspace(Side::primal, kernel(constraints));
}

} // namespace grassmap
