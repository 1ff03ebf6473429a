#pragma once

#include "grassmap/euclid.hpp"

#include <json.hpp>

namespace grassmap {

using Json = nlohmann::json;

// Field elements travel as decimal strings so that 64-bit-unsafe JSON
// consumers survive the default 61-bit modulus.

Scalar scalar_from_json(const PrimeField& f, const Json& j);
Json scalar_to_json(Scalar v);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const PrimeField& f, const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const PrimeField& f, const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json incidence_point_to_json(const IncidencePoint& pt);
IncidencePoint incidence_point_from_json(const Algebra& alg, const Json& j);

Json certificate_to_json(const GoodnessCertificate& c);
Json goodness_check_to_json(const GoodnessCheck& c);

/// The chain-run report: {"n", "r", "gcd", "remainders", "flag_dims",
/// "steps": [{"case", "dims", "fiber_dim"}], "output"} plus a "fault"
/// entry when the composite was undefined at the sampled input.
Json chain_report_to_json(const GoodFlag& flag, const ChainOutcome& outcome);

} // namespace grassmap
