#pragma once

#include "grassmap/incidence.hpp"

namespace grassmap {

/// Remainder/quotient data of the Euclidean algorithm on (n, r):
/// r_0 = n, r_1 = r, r_{i+1} = r_{i-1} mod r_i down to r_s = gcd(n, r),
/// r_{s+1} = 0, with r_{i-1} = q_i r_i + r_{i+1}.
struct EuclidChain {
    std::size_t n = 0, r = 0;
    std::vector<std::size_t> remainders; // r_0 .. r_{s+1}
    std::vector<std::size_t> quotients;  // q_1 .. q_s

    std::size_t steps() const noexcept { return quotients.size(); }
    std::size_t gcd() const noexcept { return remainders[remainders.size() - 2]; }
    /// The final point lives in the dual Grassmannian when s is even, so a
    /// closing dualization is required to land back in G(gcd, A).
    bool needs_dualization() const noexcept { return steps() % 2 == 0; }
    /// dim U_0 .. dim U_s (cumulative quotient sums, starting at 0).
    std::vector<std::size_t> flag_dims() const;
};

/// Throws std::invalid_argument("r out of range") unless 0 < r < n.
EuclidChain euclid_sequence(std::size_t n, std::size_t r);

/// A nested flag U_0 = {0} < U_1 < .. < U_s with dim U_i - dim U_{i-1} = q_i,
/// each member certified good for exactly the pair its chain step needs,
/// plus (when s is even) an independently drawn good subspace of dimension
/// n/gcd - 1 for the closing dualization.
struct GoodFlag {
    EuclidChain chain;
    std::vector<Subspace> subspaces; // U_0 .. U_s
    std::vector<GoodnessCertificate> certificates;
    std::optional<Subspace> dual_reference;
};

GoodFlag sample_good_flag(const Algebra& alg, const EuclidChain& chain, Rng& rng, int budget = 64);

/// Which coordinate a reduction step shrinks: the dual one (X, when
/// dim X >= dim Y) or the primal one (Y, when dim Y > dim X).
enum class StepCase { reduce_dual, reduce_primal };

/// Why a rational map was undefined at the given input. These are
/// recoverable signals -- callers resample -- not errors.
enum class DomainFault {
    none,
    product_dimension,      // condition (a): dim of the U'-product not maximal
    intersection_dimension, // condition (b): the intersection missed the expected dim
    image_degenerate        // image failed the open-locus membership check
};

const char* to_string(StepCase c);
const char* to_string(DomainFault f);

struct StepResult {
    std::optional<IncidencePoint> point;
    DomainFault fault = DomainFault::none;
    StepCase step_case = StepCase::reduce_dual;
};

/// One Euclid reduction step from the locus of (X, Y) relative to U = pt.U
/// into the locus relative to U', where U <= U' and q = dim U' - dim U is
/// the Euclid quotient of the larger coordinate dimension by the smaller:
///   dim X >= dim Y:  (X, Y) |-> (X cap (Y.U')^perp, Y)
///   dim Y >  dim X:  (X, Y) |-> (X, Y cap (U'.X)^perp)
/// The image is verified against the open locus of the reduced triple.
StepResult reduction_step(const Algebra& alg, const IncidencePoint& pt, const Subspace& u_prime);

/// Samples a preimage of `target` under the reduction step that enlarged
/// coordinate, i.e. a point over U = the smaller reference subspace with
/// target.U = U'. The fiber is an open piece of the Grassmannian of
/// sq-dimensional subspaces of (Y.U)^perp / X, of dimension sq(n - us - r)
/// in the reduce_dual case (mirror for reduce_primal). The returned point
/// maps back to `target` exactly.
std::optional<IncidencePoint> sample_step_fiber(const Algebra& alg, const IncidencePoint& target,
                                                const Subspace& u_small, StepCase step_case,
                                                Rng& rng, int budget = 64);

struct DualityResult {
    std::optional<Subspace> value;
    DomainFault fault = DomainFault::none;
};

/// The duality map Y |-> (Y.U)^perp for n = q d, dim Y = d, dim U = q - 1,
/// defined where dim(Y.U) = (q-1)d; its inverse is X |-> (U.X)^perp.
DualityResult duality_forward(const Algebra& alg, const Subspace& Y, const Subspace& U);
DualityResult duality_inverse(const Algebra& alg, const Subspace& X, const Subspace& U);

struct StepRecord {
    std::size_t index = 0; // 1-based chain step
    StepCase step_case = StepCase::reduce_dual;
    std::size_t x_dim = 0, y_dim = 0, u_dim = 0; // output point dims
    std::size_t fiber_dim = 0;                   // generic fiber dimension of the step
};

struct ChainTrace {
    std::vector<StepRecord> steps;
    std::vector<IncidencePoint> points; // state after each step
    bool dualized = false;
    std::size_t total_fiber_dim() const;
};

struct ChainOutcome {
    std::optional<Subspace> output; // primal, dim gcd(n, r)
    ChainTrace trace;
    DomainFault fault = DomainFault::none;
    std::size_t fault_step = 0; // 1-based; steps() + 1 marks the dualization
};

/// The composite map: starts at (A*, Y), applies one reduction step per
/// Euclid quotient through the flag, then (for even step count) the closing
/// duality inverse. Generically the identity when r divides n.
ChainOutcome apply_chain(const Algebra& alg, const Subspace& Y, const GoodFlag& flag);

} // namespace grassmap
