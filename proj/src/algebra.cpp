#include "grassmap/algebra.hpp"

#include <string>

namespace grassmap {

namespace {

// Polynomials are coefficient vectors in ascending order, no implied terms.
using Poly = std::vector<Scalar>;

std::size_t degree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1; // degree of the zero polynomial treated as 0
}

bool is_zero_poly(const Poly& p) {
    for (Scalar c : p)
        if (c != 0) return false;
    return true;
}

Poly poly_rem(Poly a, const Poly& b, const PrimeField& f) {
    std::size_t db = degree(b);
    Scalar lead_inv = f.inv(b[db]);
    while (!is_zero_poly(a) && degree(a) >= db) {
        std::size_t da = degree(a);
        Scalar q = f.mul(a[da], lead_inv);
        for (std::size_t i = 0; i <= db; ++i) {
            a[da - db + i] = f.sub(a[da - db + i], f.mul(q, b[i]));
        }
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
    while (!is_zero_poly(b)) {
        Poly r = poly_rem(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

Algebra::Algebra(PrimeField field, std::size_t n, std::vector<Scalar> c, AlgebraElement unit,
                 bool monogenic, std::vector<Scalar> poly)
    : field_(field), n_(n), c_(std::move(c)), unit_(std::move(unit)),
      monogenic_(monogenic), poly_(std::move(poly)) {
    validate();
}

Algebra Algebra::from_structure_constants(PrimeField field,
                                          const std::vector<std::vector<std::vector<Scalar>>>& c,
                                          const std::vector<Scalar>& unit) {
    std::size_t n = c.size();
    if (n == 0) throw std::invalid_argument("empty structure constants");
    std::vector<Scalar> flat(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw std::invalid_argument("structure constants not n x n x n");
        for (std::size_t j = 0; j < n; ++j) {
            if (c[i][j].size() != n) throw std::invalid_argument("structure constants not n x n x n");
            for (std::size_t k = 0; k < n; ++k)
                flat[(i * n + j) * n + k] = field.reduce(c[i][j][k]);
        }
    }
    if (unit.size() != n) throw std::invalid_argument("bad unit: wrong length");
    AlgebraElement u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = field.reduce(unit[i]);
    return Algebra(field, n, std::move(flat), std::move(u), false, {});
}

Algebra Algebra::etale_from_poly(PrimeField field, const std::vector<Scalar>& low_coeffs) {
    std::size_t n = low_coeffs.size();
    if (n == 0) throw std::invalid_argument("polynomial must have degree >= 1");

    Poly f(n + 1);
    for (std::size_t i = 0; i < n; ++i) f[i] = field.reduce(low_coeffs[i]);
    f[n] = 1;

    Poly fp(n); // derivative
    for (std::size_t i = 1; i <= n; ++i) fp[i - 1] = field.mul(field.reduce(i), f[i]);
    Poly g = poly_gcd(f, fp, field);
    if (degree(g) != 0 || is_zero_poly(g))
        throw std::invalid_argument("not separable");

    // Powers of t reduced mod f, up to t^(2n-2).
    std::vector<AlgebraElement> pow(2 * n - 1, AlgebraElement(n, 0));
    pow[0][0] = 1;
    for (std::size_t m = 1; m < 2 * n - 1; ++m) {
        const AlgebraElement& prev = pow[m - 1];
        AlgebraElement cur(n, 0);
        Scalar top = prev[n - 1];
        for (std::size_t i = 0; i + 1 < n; ++i) cur[i + 1] = prev[i];
        if (top != 0) {
            for (std::size_t i = 0; i < n; ++i)
                cur[i] = field.sub(cur[i], field.mul(top, f[i]));
        }
        pow[m] = std::move(cur);
    }

    std::vector<Scalar> flat(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                flat[(i * n + j) * n + k] = pow[i + j][k];

    AlgebraElement unit(n, 0);
    unit[0] = 1;
    Poly low(f.begin(), f.begin() + n);
    return Algebra(field, n, std::move(flat), std::move(unit), true, std::move(low));
}

void Algebra::validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            AlgebraElement ij = mul(basis_element(i), basis_element(j));
            for (std::size_t k = 0; k < n_; ++k) {
                AlgebraElement lhs = mul(ij, basis_element(k));
                AlgebraElement rhs = mul(basis_element(i), mul(basis_element(j), basis_element(k)));
                if (lhs != rhs)
                    throw std::invalid_argument("not associative at basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
            }
        }
    }
    for (std::size_t j = 0; j < n_; ++j) {
        if (mul(unit_, basis_element(j)) != basis_element(j) ||
            mul(basis_element(j), unit_) != basis_element(j))
            throw std::invalid_argument("bad unit at basis index " + std::to_string(j));
    }
}

const std::vector<Scalar>& Algebra::min_poly() const {
    if (!monogenic_) throw std::logic_error("not a monogenic algebra");
    return poly_;
}

AlgebraElement Algebra::basis_element(std::size_t i) const {
    AlgebraElement e(n_, 0);
    e[i] = 1;
    return e;
}

AlgebraElement Algebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.size() != n_ || b.size() != n_) throw std::invalid_argument("element length mismatch");
    AlgebraElement r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            Scalar ab = field_.mul(a[i], b[j]);
            for (std::size_t k = 0; k < n_; ++k) {
                Scalar c = structure(i, j, k);
                if (c != 0) r[k] = field_.add(r[k], field_.mul(ab, c));
            }
        }
    }
    return r;
}

Matrix Algebra::left_mul_matrix(const AlgebraElement& a) const {
    if (a.size() != n_) throw std::invalid_argument("element length mismatch");
    Matrix m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t k = 0; k < n_; ++k)
                m.at(k, j) = field_.add(m.at(k, j), field_.mul(a[i], structure(i, j, k)));
        }
    return m;
}

Matrix Algebra::right_mul_matrix(const AlgebraElement& a) const {
    if (a.size() != n_) throw std::invalid_argument("element length mismatch");
    Matrix m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t k = 0; k < n_; ++k)
                m.at(k, j) = field_.add(m.at(k, j), field_.mul(a[i], structure(j, i, k)));
        }
    return m;
}

std::optional<AlgebraElement> Algebra::invert(const AlgebraElement& a) const {
    auto x = solve(left_mul_matrix(a), unit_);
    if (!x) return std::nullopt;
    if (mul(a, *x) != unit_ || mul(*x, a) != unit_) return std::nullopt;
    return x;
}

Matrix Algebra::dual_module_action_matrix(const AlgebraElement& a) const {
    return right_mul_matrix(a).transpose();
}

Matrix Algebra::gl1_dual_action_matrix(const AlgebraElement& a) const {
    auto ai = invert(a);
    if (!ai) throw std::invalid_argument("not invertible");
    return left_mul_matrix(*ai).transpose();
}

AlgebraElement Algebra::random_element(Rng& rng) const {
    AlgebraElement a(n_);
    for (std::size_t i = 0; i < n_; ++i) a[i] = rng.element(field_);
    return a;
}

AlgebraElement Algebra::random_invertible(Rng& rng, int budget) const {
    for (int t = 0; t < budget; ++t) {
        AlgebraElement a = random_element(rng);
        if (invert(a)) return a;
    }
    throw RetryExhausted("retry budget exhausted (random invertible element)");
}

} // namespace grassmap
