#include "grassmap/euclid.hpp"

#include <string>

namespace grassmap {

std::vector<std::size_t> EuclidChain::flag_dims() const {
    std::vector<std::size_t> dims{0};
    for (std::size_t q : quotients) dims.push_back(dims.back() + q);
    return dims;
}

EuclidChain euclid_sequence(std::size_t n, std::size_t r) {
    if (r == 0 || r >= n) throw std::invalid_argument("r out of range");
    EuclidChain c;
    c.n = n;
    c.r = r;
    c.remainders = {n, r};
    while (c.remainders.back() != 0) {
        std::size_t a = c.remainders[c.remainders.size() - 2];
        std::size_t b = c.remainders.back();
        c.quotients.push_back(a / b);
        c.remainders.push_back(a % b);
    }
    return c;
}

namespace {

// The locus pair certified for U_i: (r_i, r_{i+1}) when i is even,
// (r_{i+1}, r_i) when i is odd, matching the alternation of the chain.
std::pair<std::size_t, std::size_t> flag_pair(const EuclidChain& chain, std::size_t i) {
    std::size_t a = chain.remainders[i];
    std::size_t b = chain.remainders[i + 1];
    return (i % 2 == 0) ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

GoodFlag sample_good_flag(const Algebra& alg, const EuclidChain& chain, Rng& rng, int budget) {
    const PrimeField& f = alg.field();
    const std::size_t n = alg.dim();
    if (n != chain.n) throw std::invalid_argument("chain dimension mismatch");

    std::size_t failed_step = 0;
    for (int attempt = 0; attempt < budget; ++attempt) {
        GoodFlag flag;
        flag.chain = chain;
        flag.subspaces.push_back(Subspace::zero(f, Side::primal, n));
        bool ok = true;
        for (std::size_t i = 0; i <= chain.steps() && ok; ++i) {
            if (i > 0) {
                // Extend U_{i-1} by q_i fresh directions.
                std::size_t q = chain.quotients[i - 1];
                const Subspace& prev = flag.subspaces[i - 1];
                Matrix rows(f, prev.dim() + q, n);
                for (std::size_t a = 0; a < prev.dim(); ++a)
                    for (std::size_t b = 0; b < n; ++b) rows.at(a, b) = prev.basis().at(a, b);
                for (std::size_t a = 0; a < q; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        rows.at(prev.dim() + a, b) = rng.element(f);
                Subspace ui(Side::primal, std::move(rows));
                if (ui.dim() != prev.dim() + q) {
                    ok = false;
                    failed_step = i;
                    break;
                }
                flag.subspaces.push_back(std::move(ui));
            }
            auto pair = flag_pair(chain, i);
            auto checks = certify_good(alg, flag.subspaces[i], {pair}, rng, budget, i);
            if (!checks[0].certificate) {
                ok = false;
                failed_step = i;
                break;
            }
            flag.certificates.push_back(std::move(*checks[0].certificate));
        }
        if (ok && chain.needs_dualization()) {
            std::size_t d = chain.gcd();
            Subspace ud = random_subspace(f, Side::primal, n, n / d - 1, rng, budget);
            auto checks = certify_good(alg, ud, {{d, d}}, rng, budget, chain.steps() + 1);
            if (!checks[0].certificate) {
                ok = false;
                failed_step = chain.steps() + 1;
            } else {
                flag.certificates.push_back(std::move(*checks[0].certificate));
                flag.dual_reference = std::move(ud);
            }
        }
        if (ok) return flag;
    }
    throw RetryExhausted("retry budget exhausted (good flag, step " +
                         std::to_string(failed_step) + ")");
}

const char* to_string(StepCase c) {
    return c == StepCase::reduce_dual ? "reduce-dual" : "reduce-primal";
}

const char* to_string(DomainFault f) {
    switch (f) {
        case DomainFault::none: return "none";
        case DomainFault::product_dimension: return "product-dimension";
        case DomainFault::intersection_dimension: return "intersection-dimension";
        case DomainFault::image_degenerate: return "image-degenerate";
    }
    return "?";
}

StepResult reduction_step(const Algebra& alg, const IncidencePoint& pt, const Subspace& u_prime) {
    const std::size_t n = alg.dim();
    const std::size_t r = pt.X.dim(), s = pt.Y.dim(), u = pt.U.dim();
    if (u_prime.side() != Side::primal || u_prime.ambient() != n)
        throw std::invalid_argument("reference subspace mismatch");
    if (!u_prime.contains(pt.U))
        throw std::invalid_argument("U' must contain U");
    const std::size_t q = u_prime.dim() - u;

    StepResult res;
    res.step_case = (r >= s) ? StepCase::reduce_dual : StepCase::reduce_primal;
    const std::size_t big = std::max(r, s), small = std::min(r, s);
    if (small == 0 || q != big / small)
        throw std::invalid_argument("U' dimension inconsistent with the Euclid division");
    const std::size_t t = big % small;

    if (res.step_case == StepCase::reduce_dual) {
        Subspace yu = module_product(alg, u_prime, pt.Y);
        if (yu.dim() != s * (u + q)) {
            res.fault = DomainFault::product_dimension;
            return res;
        }
        Subspace xnew = intersect(pt.X, annihilator(yu));
        if (xnew.dim() != t) {
            res.fault = DomainFault::intersection_dimension;
            return res;
        }
        if (!in_incidence_open(alg, xnew, pt.Y, u_prime)) {
            res.fault = DomainFault::image_degenerate;
            return res;
        }
        res.point = make_incidence_point(alg, std::move(xnew), pt.Y, u_prime);
    } else {
        Subspace ux = module_product(alg, u_prime, pt.X);
        if (ux.dim() != r * (u + q)) {
            res.fault = DomainFault::product_dimension;
            return res;
        }
        Subspace ynew = intersect(pt.Y, annihilator(ux));
        if (ynew.dim() != t) {
            res.fault = DomainFault::intersection_dimension;
            return res;
        }
        if (!in_incidence_open(alg, pt.X, ynew, u_prime)) {
            res.fault = DomainFault::image_degenerate;
            return res;
        }
        res.point = make_incidence_point(alg, pt.X, std::move(ynew), u_prime);
    }
    return res;
}

std::optional<IncidencePoint> sample_step_fiber(const Algebra& alg, const IncidencePoint& target,
                                                const Subspace& u_small, StepCase step_case,
                                                Rng& rng, int budget) {
    const std::size_t u = u_small.dim();
    if (!target.U.contains(u_small))
        throw std::invalid_argument("target reference must contain the smaller subspace");
    const std::size_t q = target.U.dim() - u;
    if (q == 0) throw std::invalid_argument("quotient must be positive");

    if (step_case == StepCase::reduce_dual) {
        const std::size_t s = target.Y.dim(), t = target.X.dim();
        const std::size_t r = q * s + t;
        Subspace yu = module_product(alg, u_small, target.Y);
        if (yu.dim() != u * s) return std::nullopt;
        Subspace perp = annihilator(yu);
        if (!perp.contains(target.X)) return std::nullopt;
        for (int attempt = 0; attempt < budget; ++attempt) {
            Subspace extra = random_subspace_in(perp, q * s, rng, budget);
            Subspace xhat = sum(target.X, extra);
            if (xhat.dim() != r) continue;
            if (!in_incidence_open(alg, xhat, target.Y, u_small)) continue;
            IncidencePoint pre = make_incidence_point(alg, std::move(xhat), target.Y, u_small);
            StepResult fwd = reduction_step(alg, pre, target.U);
            if (fwd.fault == DomainFault::none && *fwd.point == target) return pre;
        }
        return std::nullopt;
    }

    const std::size_t r = target.X.dim(), t = target.Y.dim();
    const std::size_t s = q * r + t;
    Subspace ux = module_product(alg, u_small, target.X);
    if (ux.dim() != u * r) return std::nullopt;
    Subspace perp = annihilator(ux);
    if (!perp.contains(target.Y)) return std::nullopt;
    for (int attempt = 0; attempt < budget; ++attempt) {
        Subspace extra = random_subspace_in(perp, q * r, rng, budget);
        Subspace yhat = sum(target.Y, extra);
        if (yhat.dim() != s) continue;
        if (!in_incidence_open(alg, target.X, yhat, u_small)) continue;
        IncidencePoint pre = make_incidence_point(alg, target.X, std::move(yhat), u_small);
        StepResult fwd = reduction_step(alg, pre, target.U);
        if (fwd.fault == DomainFault::none && *fwd.point == target) return pre;
    }
    return std::nullopt;
}

namespace {

DualityResult duality_product(const Algebra& alg, const Subspace& sub, const Subspace& U) {
    const std::size_t n = alg.dim();
    const std::size_t d = sub.dim();
    if (d == 0 || n % d != 0) throw std::invalid_argument("dimension must divide the algebra dimension");
    const std::size_t qq = n / d;
    if (U.dim() != qq - 1) throw std::invalid_argument("reference subspace must have dimension n/d - 1");
    Subspace prod = module_product(alg, U, sub);
    if (prod.dim() != (qq - 1) * d) return {std::nullopt, DomainFault::product_dimension};
    return {annihilator(prod), DomainFault::none};
}

} // namespace

DualityResult duality_forward(const Algebra& alg, const Subspace& Y, const Subspace& U) {
    if (Y.side() != Side::primal) throw std::invalid_argument("expected a primal subspace");
    return duality_product(alg, Y, U);
}

DualityResult duality_inverse(const Algebra& alg, const Subspace& X, const Subspace& U) {
    if (X.side() != Side::dual) throw std::invalid_argument("expected a dual subspace");
    return duality_product(alg, X, U);
}

std::size_t ChainTrace::total_fiber_dim() const {
    std::size_t total = 0;
    for (const StepRecord& s : steps) total += s.fiber_dim;
    return total;
}

ChainOutcome apply_chain(const Algebra& alg, const Subspace& Y, const GoodFlag& flag) {
    const std::size_t n = alg.dim();
    const EuclidChain& chain = flag.chain;
    if (Y.side() != Side::primal || Y.dim() != chain.r)
        throw std::invalid_argument("input subspace must be primal of dimension r");

    ChainOutcome out;
    IncidencePoint pt = make_incidence_point(
        alg, Subspace::full(alg.field(), Side::dual, n), Y, flag.subspaces[0]);

    for (std::size_t i = 1; i <= chain.steps(); ++i) {
        std::size_t reduced_from = chain.remainders[i - 1];
        std::size_t fixed = chain.remainders[i];
        std::size_t u_prev = flag.subspaces[i - 1].dim();
        StepResult res = reduction_step(alg, pt, flag.subspaces[i]);
        if (res.fault != DomainFault::none) {
            out.fault = res.fault;
            out.fault_step = i;
            return out;
        }
        StepCase expected = (i % 2 == 1) ? StepCase::reduce_dual : StepCase::reduce_primal;
        if (res.step_case != expected)
            throw std::logic_error("chain alternation mismatch");
        pt = std::move(*res.point);
        StepRecord rec;
        rec.index = i;
        rec.step_case = res.step_case;
        rec.x_dim = pt.X.dim();
        rec.y_dim = pt.Y.dim();
        rec.u_dim = pt.U.dim();
        rec.fiber_dim = fixed * chain.quotients[i - 1] * (n - u_prev * fixed - reduced_from);
        out.trace.steps.push_back(rec);
        out.trace.points.push_back(pt);
    }

    if (chain.needs_dualization()) {
        DualityResult inv = duality_inverse(alg, pt.X, *flag.dual_reference);
        if (inv.fault != DomainFault::none) {
            out.fault = inv.fault;
            out.fault_step = chain.steps() + 1;
            return out;
        }
        out.trace.dualized = true;
        out.output = std::move(*inv.value);
    } else {
        out.output = pt.Y;
    }
    return out;
}

} // namespace grassmap
