#pragma once

#include "grassmap/json_io.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace grassmap {

/// Deterministic configuration of the verification harness. Identical
/// configs produce bit-identical reports (timings excluded): every random
/// draw flows through an Rng stream derived from (seed, suite id, case
/// index, trial index).
struct SuiteConfig {
    Scalar prime = PrimeField::default_prime;
    std::uint64_t seed = 0;
    int trials = 100;
    int budget = 64;
    bool toy = false;

    // Per-suite knobs, preset to the harness defaults.
    std::size_t max_n = 9;
    int points_per_tuple = 10;   // sampled points per (n, r, s, u) grid tuple
    int duality_trials = 50;     // roundtrips per (n, d) duality case
    int duality_a_samples = 20;  // equivariance draws per duality case
    int identity_trials = 50;    // trials per divisible (n, r) pair
    int fiber_targets = 20;      // fiber roundtrip targets across the grid
    int stabilizer_samples = 20; // subspaces per (n, d) stabilizer case

    std::vector<std::pair<std::size_t, std::size_t>> nr_pairs = {
        {3, 2}, {4, 3}, {5, 2}, {5, 3}, {7, 4}, {8, 5}, {9, 7}};
    std::vector<std::pair<std::size_t, std::size_t>> identity_pairs = {{6, 3}, {6, 2}, {8, 4}};
    std::vector<std::pair<std::size_t, std::size_t>> duality_cases = {
        {4, 2}, {6, 2}, {6, 3}, {8, 4}, {9, 3}};

    std::optional<Json> algebra_spec; // overrides the random etale algebra when dims match
    std::string out_path;

    /// Throws on trials < 1, budget < 1, or sub-minimum prime outside toy mode.
    void validate() const;
    Json to_json() const;
};

struct PropertyResult {
    std::string name;
    int cases = 0;
    int passes = 0;
    int failures = 0;
    int resamples = 0;
    Json witnesses = Json::array();

    bool ok() const noexcept { return failures == 0 && cases == passes; }
    Json to_json() const;
};

struct SuiteReport {
    std::string suite;
    Json config;
    std::vector<PropertyResult> properties;
    bool ok = false;
    double elapsed_ms = 0.0;

    Json to_json(bool include_timings = true) const;
};

/// name is one of: equivariance, dimension, roundtrip, identity,
/// goodness-grid, fiber, stabilizer, all. Writes the report JSON to
/// config.out_path when set.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// Individual properties, exposed so the acceptance gate can pin parameters.
PropertyResult prop_equivariance(const SuiteConfig&);
PropertyResult prop_dimension(const SuiteConfig&);
PropertyResult prop_duality_roundtrip(const SuiteConfig&);
PropertyResult prop_identity(const SuiteConfig&);
PropertyResult prop_fiber(const SuiteConfig&);
PropertyResult prop_witness(const SuiteConfig&);
PropertyResult prop_stabilizer(const SuiteConfig&);
PropertyResult prop_goodness_grid(const SuiteConfig&);
PropertyResult prop_toy_oracle(const SuiteConfig&);

/// All (n, r, s, u) with 2 <= n <= max_n, r, s, u >= 1, n >= ru + s and
/// n >= su + r, in lexicographic order.
std::vector<std::array<std::size_t, 4>> admissible_grid(std::size_t max_n);

/// Random monogenic etale algebra F_p[t]/(f) with f separable of degree n.
Algebra random_etale(PrimeField field, std::size_t n, Rng& rng, int budget = 256);

/// Visits every dim-dimensional subspace of F_p^ambient once (canonical
/// echelon enumeration). The callback returns false to stop early; the
/// function returns true when the enumeration ran to completion.
bool for_each_subspace(PrimeField field, Side side, std::size_t ambient, std::size_t dim,
                       const std::function<bool(const Subspace&)>& fn);

/// Exhaustive existence check for an open-locus point of the given pair
/// over a tiny field: the independent oracle for the randomized certifier.
/// Throws "instance too large" unless dim <= 4 and p <= 7.
bool toy_oracle_goodness(const Algebra& alg, const Subspace& U, std::size_t r, std::size_t s);

} // namespace grassmap
