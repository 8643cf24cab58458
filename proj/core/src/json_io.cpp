#include "idist/json_io.hpp"

#include <limits>

#include "idist/error.hpp"

namespace idist::io {

FieldCtx field_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("m")) {
    throw Error("field spec must be an object with at least \"m\"");
  }
  const auto p = spec.value("p", 3u);
  const int m = spec.at("m").get<int>();
  std::optional<std::vector<std::uint32_t>> modulus;
  if (spec.contains("modulus") && !spec.at("modulus").is_null()) {
    modulus = spec.at("modulus").get<std::vector<std::uint32_t>>();
  }
  return FieldCtx::create(p, m, modulus);
}

json field_to_json(const FieldCtx& ctx) {
  return {{"p", ctx.p()}, {"m", ctx.m()}, {"modulus", ctx.modulus()}};
}

Poly poly_from_json(const FieldCtx& ctx, const json& arr) {
  if (!arr.is_array()) throw Error("polynomial must be a JSON array of element encodings");
  std::vector<Element> c;
  c.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw Error("polynomial coefficients must be non-negative integer encodings");
    }
    c.push_back(ctx.element(v.get<std::uint64_t>()));
  }
  return Poly{std::move(c)};
}

json poly_to_json(const Poly& f) {
  json out = json::array();
  for (auto c : f.coeffs()) out.push_back(c.enc());
  return out;
}

BiPoly bipoly_from_json(const FieldCtx& ctx, const json& arr) {
  if (!arr.is_array()) throw Error("bivariate polynomial must be an array of polynomials");
  std::vector<Poly> ys;
  for (const auto& p : arr) ys.push_back(poly_from_json(ctx, p));
  return BiPoly{std::move(ys)};
}

json bipoly_to_json(const BiPoly& f) {
  json out = json::array();
  for (const auto& p : f.y_coeffs()) out.push_back(poly_to_json(p));
  return out;
}

json counts_to_json(const Distribution& dist) {
  json v = json::object();
  for (auto [i, n] : dist.counts()) v[std::to_string(i)] = n;
  return v;
}

json distribution_to_json(const Distribution& dist, const Poly& f) {
  return {{"version", kSchemaVersion},
          {"q", dist.q()},
          {"f", poly_to_json(f)},
          {"v", counts_to_json(dist)}};
}

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

json exponent_report_to_json(const ExponentReport& rep) {
  json ids = json::array();
  for (const auto& id : rep.identities) ids.push_back({{"name", id.name}, {"pass", id.pass}});
  return {{"family", family_name(rep.family)},
          {"m", rep.m},
          {"d", big_to_json(rep.d)},
          {"gcd_d_minus_1", big_to_json(rep.gcd_d_minus_1)},
          {"gcd_d", big_to_json(rep.gcd_d)},
          {"d_inv", rep.d_inv ? big_to_json(*rep.d_inv) : json(nullptr)},
          {"identities", ids},
          {"pass", rep.pass()}};
}

json two_to_one_to_json(const TwoToOneResult& r) {
  json out = {{"two_to_one", r.two_to_one}, {"image_size", r.image_size}};
  if (r.witness) {
    json pre = json::array();
    for (auto e : r.witness->preimages) pre.push_back(e.enc());
    out["witness"] = {{"value", r.witness->value.enc()}, {"fiber", pre}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json cubic_to_json(const CubicClassification& c, const RootSet& roots) {
  json rs = json::array();
  for (auto e : roots.roots) rs.push_back(e.enc());
  return {{"version", kSchemaVersion},
          {"type", cubic_type_name(c.type)},
          {"triple_root", c.triple_root},
          {"roots", rs}};
}

json report_to_json(const VerificationReport& rep, bool with_timings) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json entry = {{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}};
    if (!c.detail.is_null()) entry["detail"] = c.detail;
    if (with_timings) entry["seconds"] = c.seconds;
    checks.push_back(std::move(entry));
  }
  json out = {{"version", kSchemaVersion}, {"family", rep.family}, {"m", rep.m}};
  if (rep.d) out["d"] = big_to_json(*rep.d);
  if (rep.d_inv) out["d_inv"] = big_to_json(*rep.d_inv);
  if (rep.distribution) out["v"] = counts_to_json(*rep.distribution);
  out["checks"] = std::move(checks);
  out["overall"] = status_name(rep.overall());
  return out;
}

}  // namespace idist::io
