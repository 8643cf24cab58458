#include "idist/maps.hpp"

#include <limits>
#include <numeric>

#include "idist/error.hpp"

namespace idist {
namespace {

void check_cap(const FieldCtx& ctx, const char* what) {
  if (ctx.q() > kEnumerationCap) {
    throw CapError(std::string(what) + ": q = " + std::to_string(ctx.q()) +
                   " exceeds the enumeration cap 3^9");
  }
}

void require_char3(const FieldCtx& ctx, const char* what) {
  if (ctx.p() != 3) throw Error(std::string(what) + " is defined over F_{3^m} only");
}

// (x^e - 1) as a Poly.
Poly power_minus_one(const FieldCtx& ctx, std::uint64_t e) {
  std::vector<Element> c(e + 1);
  c[0] = ctx.from_int(-1);
  c[e] = ctx.add(c[e], ctx.one());
  return Poly{std::move(c)};
}

}  // namespace

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw Error("integer does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

EvaluableMap EvaluableMap::polynomial(const FieldCtx& ctx, Poly f, std::vector<Element> domain) {
  EvaluableMap map(ctx, Kind::polynomial, std::move(domain));
  map.num_ = std::move(f);
  return map;
}

EvaluableMap EvaluableMap::rational(const FieldCtx& ctx, Poly num, Poly den,
                                   std::vector<Element> domain) {
  if (den.is_zero()) throw Error("map: zero denominator");
  for (auto x : domain) {
    if (poly_eval(ctx, den, x).is_zero()) {
      throw Error("map: denominator vanishes at domain point " + std::to_string(x.enc()));
    }
  }
  EvaluableMap map(ctx, Kind::rational, std::move(domain));
  map.num_ = std::move(num);
  map.den_ = std::move(den);
  return map;
}

EvaluableMap EvaluableMap::monomial(const FieldCtx& ctx, std::uint64_t exponent,
                                   std::vector<Element> domain) {
  EvaluableMap map(ctx, Kind::monomial, std::move(domain));
  map.exponent_ = exponent;
  return map;
}

Element EvaluableMap::operator()(Element x) const {
  switch (kind_) {
    case Kind::polynomial:
      return poly_eval(ctx_, num_, x);
    case Kind::rational:
      return ctx_.div(poly_eval(ctx_, num_, x), poly_eval(ctx_, den_, x));
    case Kind::monomial:
      return ctx_.pow(x, exponent_);
  }
  return Element{};
}

std::vector<Element> domain_excluding(const FieldCtx& ctx,
                                      std::initializer_list<Element> removed) {
  std::vector<Element> out;
  out.reserve(ctx.q());
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    bool skip = false;
    for (auto r : removed) skip = skip || r.enc() == v;
    if (!skip) out.emplace_back(v);
  }
  return out;
}

TwoToOneResult is_two_to_one(const EvaluableMap& map) {
  const auto& ctx = map.field();
  const auto& domain = map.domain();
  if (domain.size() % 2 != 0) {
    throw Error("two-to-one: domain size " + std::to_string(domain.size()) +
                " is odd; only even domains are supported");
  }
  check_cap(ctx, "two-to-one");

  std::vector<Element> images;
  images.reserve(domain.size());
  std::vector<std::uint32_t> fiber(ctx.q(), 0);
  for (auto x : domain) {
    images.push_back(map(x));
    ++fiber[images.back().enc()];
  }

  TwoToOneResult out;
  out.two_to_one = true;
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    if (!fiber[v]) continue;
    ++out.image_size;
    if (fiber[v] != 2 && out.two_to_one) {
      out.two_to_one = false;
      Fiber w{Element{v}, {}};
      for (std::size_t i = 0; i < domain.size(); ++i) {
        if (images[i].enc() == v) w.preimages.push_back(domain[i]);
      }
      out.witness = std::move(w);
    }
  }
  return out;
}

EvaluableMap g_map(const FieldCtx& ctx, std::uint64_t d) {
  return EvaluableMap::rational(ctx, power_minus_one(ctx, d), power_minus_one(ctx, 1),
                                domain_excluding(ctx, {ctx.one()}));
}

EvaluableMap h1_map(const FieldCtx& ctx) {
  require_char3(ctx, "h1");
  const std::uint64_t s = to_u64(ipow(3, static_cast<unsigned>((ctx.m() - 1) / 2)));
  return EvaluableMap::rational(ctx, power_minus_one(ctx, 2 * s + 1), power_minus_one(ctx, s),
                                domain_excluding(ctx, {ctx.one()}));
}

EvaluableMap h2_map(const FieldCtx& ctx) {
  require_char3(ctx, "h2");
  return EvaluableMap::rational(ctx, Poly::from_ints(ctx, {1, 1, 1, 1, 1}),
                                Poly::from_ints(ctx, {1, 1, 1}),
                                domain_excluding(ctx, {ctx.one()}));
}

KlyResult kly_criterion(const FieldCtx& ctx, std::uint64_t d) {
  require_char3(ctx, "kly_criterion");
  if (d < 2 || d > ctx.q() - 1) {
    throw Error("kly_criterion: d = " + std::to_string(d) + " outside [2, q-1]");
  }
  KlyResult r;
  r.d = d;
  r.gcd_d_minus_1 = std::gcd(d - 1, ctx.q() - 1);
  r.gcd_ok = r.gcd_d_minus_1 == 2;
  r.g_two_to_one = is_two_to_one(g_map(ctx, d));
  return r;
}

bool is_permutation_monomial(const FieldCtx& ctx, std::uint64_t e) {
  check_cap(ctx, "permutation check");
  std::vector<bool> hit(ctx.q(), false);
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    const auto y = ctx.pow(Element{v}, e).enc();
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

QmResult qm_substitution_check(const FieldCtx& ctx, const ExponentFamily& family) {
  require_char3(ctx, "qm_substitution_check");
  check_cap(ctx, "qm_substitution_check");
  if (ctx.m() != family.m) throw Error("qm_substitution_check: field degree differs from m");

  QmResult r;
  r.family = family.family;
  const std::uint64_t d = to_u64(family.d);
  const EvaluableMap target = family.family == Family::case_i ? h1_map(ctx) : h2_map(ctx);
  r.substitution_exponent =
      family.family == Family::case_i ? to_u64(ipow(3, static_cast<unsigned>((family.m - 1) / 2)))
                                      : 3;
  r.substitution_is_permutation = is_permutation_monomial(ctx, r.substitution_exponent);

  r.functions_agree = true;
  for (auto x : target.domain()) {
    const Element y = ctx.pow(x, r.substitution_exponent);
    if (y == ctx.one()) {
      r.functions_agree = false;
      r.mismatch_at = x;
      break;
    }
    const Element g = ctx.div(ctx.sub(ctx.pow(y, d), ctx.one()), ctx.sub(y, ctx.one()));
    if (g != target(x)) {
      r.functions_agree = false;
      r.mismatch_at = x;
      break;
    }
  }
  return r;
}

}  // namespace idist
