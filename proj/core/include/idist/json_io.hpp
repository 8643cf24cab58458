#pragma once

#include <nlohmann/json.hpp>

#include "idist/cubic.hpp"
#include "idist/distribution.hpp"
#include "idist/exponents.hpp"
#include "idist/field.hpp"
#include "idist/harness.hpp"
#include "idist/maps.hpp"
#include "idist/poly.hpp"

namespace idist::io {

using nlohmann::json;

/// Version tag carried by every top-level JSON document.
inline constexpr int kSchemaVersion = 1;

/// {"p": 3, "m": 3, "modulus": [1, 2, 0, 1]}; modulus optional.
FieldCtx field_from_json(const json& spec);
json field_to_json(const FieldCtx& ctx);

/// Array of element encodings, constant term first.
Poly poly_from_json(const FieldCtx& ctx, const json& arr);
json poly_to_json(const Poly& f);
/// Array of Poly arrays, index j holding the coefficient of y^j.
BiPoly bipoly_from_json(const FieldCtx& ctx, const json& arr);
json bipoly_to_json(const BiPoly& f);

/// Sparse string-keyed map of the nonzero counts.
json counts_to_json(const Distribution& dist);
/// {"q": 27, "f": [...], "v": {"0": 234, "1": 378, "3": 117}}.
json distribution_to_json(const Distribution& dist, const Poly& f);

/// Number when it fits in 64 bits, decimal string otherwise.
json big_to_json(const BigInt& v);

/// {"family", "m", "d", "gcd_d_minus_1", "gcd_d", "d_inv", "identities"}.
json exponent_report_to_json(const ExponentReport& rep);

json two_to_one_to_json(const TwoToOneResult& r);
json cubic_to_json(const CubicClassification& c, const RootSet& roots);

/// {"family", "m", "checks": [{"name", "status", "witness"}], "overall"};
/// per-check wall-clock seconds only when with_timings is set.
json report_to_json(const VerificationReport& rep, bool with_timings = false);

}  // namespace idist::io
