#include "idist/cubic.hpp"

#include <algorithm>

#include "idist/error.hpp"

namespace idist {
namespace {

void require_char3(const FieldCtx& ctx) {
  if (ctx.p() != 3) throw Error("cubic classification is defined over F_{3^n} only");
}

}  // namespace

std::string_view cubic_type_name(CubicType t) {
  switch (t) {
    case CubicType::split:
      return "(1,1,1)";
    case CubicType::one_root:
      return "(1,2)";
    case CubicType::irreducible:
      return "(3)";
  }
  return "?";
}

CubicClassification classify_cubic(const FieldCtx& ctx, Element a, Element b) {
  require_char3(ctx);
  CubicClassification out;
  if (a.is_zero()) {
    out.type = CubicType::split;
    out.triple_root = true;
    return out;
  }
  const auto c = ctx.sqrt(ctx.neg(a));
  if (!c) {
    out.type = CubicType::one_root;
    return out;
  }
  out.c = *c;
  const Element c3 = ctx.mul(*c, ctx.mul(*c, *c));
  const Element t = ctx.trace(ctx.div(b, c3));
  out.type = t.is_zero() ? CubicType::split : CubicType::irreducible;
  return out;
}

RootSet cubic_root_oracle(const FieldCtx& ctx, Element a, Element b) {
  return root_count(ctx, Poly{b, a, ctx.zero(), ctx.one()});
}

CubicType type_from_root_count(std::size_t distinct_roots, bool a_is_zero) {
  if (a_is_zero) {
    if (distinct_roots != 1) throw Error("x^3 + b must have exactly one distinct root");
    return CubicType::split;
  }
  switch (distinct_roots) {
    case 3:
      return CubicType::split;
    case 1:
      return CubicType::one_root;
    case 0:
      return CubicType::irreducible;
    default:
      throw Error("a squarefree cubic cannot have " + std::to_string(distinct_roots) +
                  " distinct roots");
  }
}

Poly case_ii_cubic(const FieldCtx& ctx, Element a) {
  const Element a2 = ctx.mul(a, a);
  const Element a3 = ctx.mul(a2, a);
  const Element a4 = ctx.mul(a3, a);
  const Element a5 = ctx.mul(a4, a);
  const Element two = ctx.from_int(2);
  const Element q = ctx.add(ctx.add(a2, a), ctx.one());
  if (q.is_zero()) throw Error("case_ii_cubic: a^2 + a + 1 vanishes");
  const Element c1 = ctx.div(ctx.add(ctx.mul(two, a4), ctx.mul(two, a3)), q);
  const Element c0 = ctx.div(ctx.add(ctx.mul(two, a5), a4), q);
  return Poly{c0, c1, ctx.add(a, ctx.one()), ctx.one()};
}

CaseIIReduction reduce_case_ii(const FieldCtx& ctx, Element a) {
  require_char3(ctx);
  if (ctx.in_prime_field(a)) {
    throw Error("reduce_case_ii: a = " + std::to_string(a.enc()) + " lies in F_3");
  }
  CaseIIReduction r;
  r.a = a;
  const Element one = ctx.one();
  const Element a2 = ctx.mul(a, a);
  const Element a3 = ctx.mul(a2, a);
  const Element a4 = ctx.mul(a3, a);
  const Element a5 = ctx.mul(a4, a);
  const Element q = ctx.add(ctx.add(a2, a), one);
  const Element q3 = ctx.pow(q, 3);

  r.h = case_ii_cubic(ctx, a);
  r.shift = ctx.div(ctx.mul(ctx.from_int(2), a3), q);
  r.h_tilde = poly_reverse(poly_shift(ctx, r.h, r.shift), 3);

  const Element lead = ctx.div(ctx.add(a5, a4), q3);
  r.h_tilde_matches_closed_form = r.h_tilde == Poly{one, ctx.add(a, one), ctx.zero(), lead};

  if (r.h_tilde.degree() != 3) throw Error("reduce_case_ii: reciprocal shift lost degree");
  r.m_poly = poly_monic(ctx, r.h_tilde);
  const Element lin = ctx.div(q3, a4);
  const Element con = ctx.div(q3, ctx.add(a5, a4));
  r.m_matches_closed_form = r.m_poly == Poly{con, lin, ctx.zero(), one};

  const Element base = ctx.div(ctx.mul(q, ctx.sub(a, one)), a2);
  r.square_identity = ctx.neg(lin) == ctx.neg(ctx.mul(base, base));
  r.linear_coeff_nonsquare = !ctx.is_square(ctx.neg(lin));

  r.m_type = classify_cubic(ctx, r.m_poly[1], r.m_poly[0]);

  if (ctx.q() <= kEnumerationCap) {
    r.h_roots = root_count(ctx, r.h).roots;
    r.m_roots = root_count(ctx, r.m_poly).roots;
    std::vector<Element> mapped;
    bool ok = true;
    for (auto t : r.h_roots) {
      if (t == r.shift) {
        ok = false;
        continue;
      }
      mapped.push_back(ctx.inv(ctx.sub(t, r.shift)));
    }
    std::sort(mapped.begin(), mapped.end());
    r.roots_correspond = ok && mapped == r.m_roots;
  }
  return r;
}

}  // namespace idist
