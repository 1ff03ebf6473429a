#pragma once

#include "grassmap/subspace.hpp"

#include <optional>

namespace grassmap {

/// A point of the incidence locus attached to a reference subspace U:
/// a pair (X in A* of dim r, Y in A of dim s) with <Y.U, X> = 0. The
/// product dimensions are cached; the point lies in the open locus when
/// both are maximal (dim U.X = ur, dim Y.U = us).
struct IncidencePoint {
    Subspace X; // dual
    Subspace Y; // primal
    Subspace U; // primal reference
    std::size_t dim_UX = 0;
    std::size_t dim_YU = 0;

    bool operator==(const IncidencePoint&) const = default;
};

/// Witness that U is good for a pair (r, s): a verified open-locus point
/// with both product dimensions maximal, plus the RNG stream that found it.
struct GoodnessCertificate {
    std::size_t r = 0, s = 0;
    std::size_t dim_UX = 0, dim_YU = 0;
    IncidencePoint point;
    std::uint64_t stream = 0;
};

/// Outcome of a per-pair goodness check. An absent certificate means
/// "not proven good" after the given attempts, never "proven bad".
struct GoodnessCheck {
    std::size_t r = 0, s = 0;
    std::optional<GoodnessCertificate> certificate;
    int attempts = 0;
};

bool dims_admissible(std::size_t n, std::size_t r, std::size_t s, std::size_t u);
/// Throws std::invalid_argument("dimension constraints violated") unless
/// n >= ru + s and n >= su + r.
void require_admissible(std::size_t n, std::size_t r, std::size_t s, std::size_t u);

/// Validates sides/ambients, checks <Y.U, X> = 0 and caches the product
/// dimensions. Throws std::invalid_argument when the pairing does not vanish.
IncidencePoint make_incidence_point(const Algebra& alg, Subspace X, Subspace Y, Subspace U);

/// The closed incidence condition <Y.U, X> = 0. Evaluated both directly and
/// as Y <= (U.X)^perp; the two readings must agree (logic_error otherwise).
bool in_incidence(const Algebra& alg, const Subspace& X, const Subspace& Y, const Subspace& U);

/// The open locus: incidence plus maximal product dimensions
/// dim U.X = ur and dim Y.U = us. Throws when (n, r, s, u) is inadmissible.
bool in_incidence_open(const Algebra& alg, const Subspace& X, const Subspace& Y, const Subspace& U);

/// Draws random Y of dim s until dim Y.U = us, then random X inside
/// (Y.U)^perp until dim U.X = ur. Budget applies per sampling stage.
std::optional<IncidencePoint> try_sample_incidence_point(const Algebra& alg, std::size_t r,
                                                         std::size_t s, const Subspace& U,
                                                         Rng& rng, int budget = 64);
/// Same, but throws RetryExhausted instead of returning nullopt (a signal
/// that U is likely not good for (r, s)).
IncidencePoint sample_incidence_point(const Algebra& alg, std::size_t r, std::size_t s,
                                      const Subspace& U, Rng& rng, int budget = 64);

/// Rank of the tangent map
///   Hom(X, A*/X) + Hom(Y, A/Y) -> (X (x) Y (x) U)*,
///   (f, g) |-> (x (x) y (x) z |-> f(x)(yz) + x(g(y)z)),
/// assembled as an explicit (rsu) x (r(n-r)+s(n-s)) matrix. Rows are indexed
/// by basis triples (x_i, y_j, u_k) in lexicographic order, columns by the
/// f-block then the g-block, each Hom coordinate ordered by (domain basis
/// vector, complement coordinate). At every open-locus point the rank is
/// r*s*u, so the tangent dimension is r(n-r)+s(n-s)-rsu.
std::size_t tangent_map_rank(const Algebra& alg, const IncidencePoint& pt);

/// The explicit good triple for a monogenic etale algebra with power basis
/// 1, t, .., t^{n-1}:
///   X = span(1, t, .., t^{n-r-1})^perp,
///   Y = span(1, t, .., t^{s-1}),
///   U = span(1, t^m, t^{2m}, .., t^{(u-1)m}) with spacing m = max(r, s)
/// (spacing 1 when r = s = 0). The construction is stated for s >= r; the
/// r > s case uses the mirrored spacing. Verified against the open locus
/// before returning.
struct WitnessTriple {
    Subspace U, X, Y;
};
WitnessTriple monogenic_witness(const Algebra& alg, std::size_t r, std::size_t s, std::size_t u);

/// Per-pair randomized goodness certification. Failures are recorded, not
/// thrown; stream_tag is copied into the certificates for replayability.
std::vector<GoodnessCheck> certify_good(const Algebra& alg, const Subspace& U,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        Rng& rng, int budget = 64, std::uint64_t stream_tag = 0);

} // namespace grassmap
