#include "grassmap/incidence.hpp"

namespace grassmap {

namespace {

struct IncidenceData {
    Subspace YU;
    Subspace UX;
    bool incident;
};

IncidenceData compute_incidence(const Algebra& alg, const Subspace& X, const Subspace& Y,
                                const Subspace& U) {
    if (X.side() != Side::dual || Y.side() != Side::primal || U.side() != Side::primal)
        throw std::invalid_argument("side mismatch");
    if (X.ambient() != alg.dim() || Y.ambient() != alg.dim() || U.ambient() != alg.dim())
        throw std::invalid_argument("ambient mismatch");
    Subspace yu = module_product(alg, U, Y);
    Subspace ux = module_product(alg, U, X);
    bool direct = X.basis().mul(yu.basis().transpose()).is_zero();
    bool adjoint = Y.basis().mul(ux.basis().transpose()).is_zero();
    if (direct != adjoint)
        throw std::logic_error("incidence readings disagree");
    return {std::move(yu), std::move(ux), direct};
}

} // namespace

bool dims_admissible(std::size_t n, std::size_t r, std::size_t s, std::size_t u) {
    return n >= r * u + s && n >= s * u + r;
}

void require_admissible(std::size_t n, std::size_t r, std::size_t s, std::size_t u) {
    if (!dims_admissible(n, r, s, u))
        throw std::invalid_argument("dimension constraints violated");
}

IncidencePoint make_incidence_point(const Algebra& alg, Subspace X, Subspace Y, Subspace U) {
    IncidenceData d = compute_incidence(alg, X, Y, U);
    if (!d.incident) throw std::invalid_argument("pairing does not vanish");
    return {std::move(X), std::move(Y), std::move(U), d.UX.dim(), d.YU.dim()};
}

bool in_incidence(const Algebra& alg, const Subspace& X, const Subspace& Y, const Subspace& U) {
    return compute_incidence(alg, X, Y, U).incident;
}

bool in_incidence_open(const Algebra& alg, const Subspace& X, const Subspace& Y,
                       const Subspace& U) {
    require_admissible(alg.dim(), X.dim(), Y.dim(), U.dim());
    IncidenceData d = compute_incidence(alg, X, Y, U);
    return d.incident && d.UX.dim() == U.dim() * X.dim() && d.YU.dim() == U.dim() * Y.dim();
}

std::optional<IncidencePoint> try_sample_incidence_point(const Algebra& alg, std::size_t r,
                                                         std::size_t s, const Subspace& U,
                                                         Rng& rng, int budget) {
    const std::size_t n = alg.dim();
    const std::size_t u = U.dim();
    require_admissible(n, r, s, u);
    for (int ty = 0; ty < budget; ++ty) {
        Subspace Y = random_subspace(alg.field(), Side::primal, n, s, rng, budget);
        Subspace yu = module_product(alg, U, Y);
        if (yu.dim() != u * s) continue;
        Subspace perp = annihilator(yu); // dual, dim n - us >= r
        for (int tx = 0; tx < budget; ++tx) {
            Subspace X = random_subspace_in(perp, r, rng, budget);
            Subspace ux = module_product(alg, U, X);
            if (ux.dim() != u * r) continue;
            return IncidencePoint{std::move(X), std::move(Y), U, ux.dim(), yu.dim()};
        }
    }
    return std::nullopt;
}

IncidencePoint sample_incidence_point(const Algebra& alg, std::size_t r, std::size_t s,
                                      const Subspace& U, Rng& rng, int budget) {
    auto pt = try_sample_incidence_point(alg, r, s, U, rng, budget);
    if (!pt) throw RetryExhausted("retry budget exhausted (incidence point sampling)");
    return std::move(*pt);
}

std::size_t tangent_map_rank(const Algebra& alg, const IncidencePoint& pt) {
    const PrimeField& f = alg.field();
    const std::size_t n = alg.dim();
    const std::size_t r = pt.X.dim(), s = pt.Y.dim(), u = pt.U.dim();

    // Complements of X in A* and of Y in A: the standard coordinates away
    // from the pivot columns.
    std::vector<std::size_t> cx, cy;
    {
        std::vector<bool> px(n, false), py(n, false);
        for (std::size_t p : pt.X.pivots()) px[p] = true;
        for (std::size_t p : pt.Y.pivots()) py[p] = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!px[j]) cx.push_back(j);
            if (!py[j]) cy.push_back(j);
        }
    }

    std::vector<Matrix> right_u; // right multiplication by each basis vector of U
    right_u.reserve(u);
    for (std::size_t k = 0; k < u; ++k) {
        AlgebraElement uk(pt.U.basis().row(k).begin(), pt.U.basis().row(k).end());
        right_u.push_back(alg.right_mul_matrix(uk));
    }

    // yu[j][k] = y_j * u_k
    std::vector<std::vector<std::vector<Scalar>>> yu(s);
    for (std::size_t j = 0; j < s; ++j) {
        yu[j].reserve(u);
        for (std::size_t k = 0; k < u; ++k)
            yu[j].push_back(right_u[k].apply(pt.Y.basis().row(j)));
    }

    // dots[i][b][k] = phi_i(e_{cy[b]} * u_k); e_{cy[b]} * u_k is column
    // cy[b] of right_u[k].
    std::vector<std::vector<std::vector<Scalar>>> dots(
        r, std::vector<std::vector<Scalar>>(cy.size(), std::vector<Scalar>(u, 0)));
    for (std::size_t i = 0; i < r; ++i) {
        auto phi = pt.X.basis().row(i);
        for (std::size_t b = 0; b < cy.size(); ++b) {
            for (std::size_t k = 0; k < u; ++k) {
                Scalar acc = 0;
                for (std::size_t m = 0; m < n; ++m)
                    acc = f.add(acc, f.mul(phi[m], right_u[k].at(m, cy[b])));
                dots[i][b][k] = acc;
            }
        }
    }

    const std::size_t f_cols = r * (n - r);
    Matrix theta(f, r * s * u, f_cols + s * (n - s));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t k = 0; k < u; ++k) {
                std::size_t row = (i * s + j) * u + k;
                for (std::size_t a = 0; a < cx.size(); ++a)
                    theta.at(row, i * (n - r) + a) = yu[j][k][cx[a]];
                for (std::size_t b = 0; b < cy.size(); ++b)
                    theta.at(row, f_cols + j * (n - s) + b) = dots[i][b][k];
            }
        }
    }
    return rref(theta).rank();
}

WitnessTriple monogenic_witness(const Algebra& alg, std::size_t r, std::size_t s, std::size_t u) {
    if (!alg.is_monogenic()) throw std::invalid_argument("not a monogenic algebra");
    const std::size_t n = alg.dim();
    if (!dims_admissible(n, r, s, u) || u > n)
        throw std::invalid_argument("constraints violated");
    const PrimeField& f = alg.field();

    std::size_t spacing = std::max(r, s);
    if (spacing == 0) spacing = 1;
    std::vector<std::vector<Scalar>> u_rows;
    for (std::size_t j = 0; j < u; ++j) {
        std::vector<Scalar> row(n, 0);
        row[j * spacing] = 1;
        u_rows.push_back(std::move(row));
    }
    Subspace U = Subspace::span(f, Side::primal, n, u_rows);

    std::vector<std::vector<Scalar>> y_rows;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Scalar> row(n, 0);
        row[i] = 1;
        y_rows.push_back(std::move(row));
    }
    Subspace Y = Subspace::span(f, Side::primal, n, y_rows);

    std::vector<std::vector<Scalar>> lead_rows;
    for (std::size_t i = 0; i + r < n; ++i) {
        std::vector<Scalar> row(n, 0);
        row[i] = 1;
        lead_rows.push_back(std::move(row));
    }
    Subspace X = annihilator(Subspace::span(f, Side::primal, n, lead_rows));

    if (!in_incidence_open(alg, X, Y, U))
        throw std::logic_error("witness construction failed the open-locus check");
    return {std::move(U), std::move(X), std::move(Y)};
}

std::vector<GoodnessCheck> certify_good(const Algebra& alg, const Subspace& U,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        Rng& rng, int budget, std::uint64_t stream_tag) {
    std::vector<GoodnessCheck> out;
    out.reserve(pairs.size());
    for (auto [r, s] : pairs) {
        require_admissible(alg.dim(), r, s, U.dim());
        GoodnessCheck check{r, s, std::nullopt, budget};
        if (auto pt = try_sample_incidence_point(alg, r, s, U, rng, budget)) {
            check.certificate =
                GoodnessCertificate{r, s, pt->dim_UX, pt->dim_YU, std::move(*pt), stream_tag};
        }
        out.push_back(std::move(check));
    }
    return out;
}

} // namespace grassmap
