#include "idist/poly.hpp"

#include <algorithm>
#include <bit>

#include "idist/error.hpp"

namespace idist {
namespace {

void strip(std::vector<Element>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::vector<Element> high_first(const Poly& f) {
  return {f.coeffs().rbegin(), f.coeffs().rend()};
}

}  // namespace

Poly::Poly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

Poly Poly::monomial(Element c, std::size_t k) {
  std::vector<Element> out(k + 1);
  out[k] = c;
  return Poly{std::move(out)};
}

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Element> out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.push_back(ctx.from_int(c));
  return Poly{std::move(out)};
}

std::size_t Poly::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](Element e) { return !e.is_zero(); }));
}

BiPoly::BiPoly(std::vector<Poly> y_coeffs) : y_coeffs_(std::move(y_coeffs)) {
  while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

Poly poly_add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ctx.add(a[i], b[i]);
  return Poly{std::move(out)};
}

Poly poly_neg(const FieldCtx& ctx, const Poly& a) {
  std::vector<Element> out;
  out.reserve(a.coeffs().size());
  for (auto c : a.coeffs()) out.push_back(ctx.neg(c));
  return Poly{std::move(out)};
}

Poly poly_sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  return poly_add(ctx, a, poly_neg(ctx, b));
}

Poly poly_scale(const FieldCtx& ctx, const Poly& a, Element c) {
  std::vector<Element> out;
  out.reserve(a.coeffs().size());
  for (auto x : a.coeffs()) out.push_back(ctx.mul(x, c));
  return Poly{std::move(out)};
}

Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly{std::move(out)};
}

Poly poly_pow(const FieldCtx& ctx, const Poly& a, unsigned e) {
  Poly result = Poly::constant(ctx.one());
  Poly base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = poly_mul(ctx, result, base);
    if (e > 1) base = poly_mul(ctx, base, base);
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("poly: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Element> rem = a.coeffs();
  std::vector<Element> quot(rem.size() - b.coeffs().size() + 1);
  const Element lead_inv = ctx.inv(b.leading());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    const Element c = ctx.mul(rem[k], lead_inv);
    if (c.is_zero()) continue;
    const std::size_t shift = k - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, b.coeffs()[i]));
    }
  }
  rem.resize(db);
  return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly poly_exact_div(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(ctx, a, b);
  if (!r.is_zero()) throw Error("poly: division is not exact");
  return q;
}

Poly poly_monic(const FieldCtx& ctx, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(ctx, a, ctx.inv(a.leading()));
}

Poly poly_gcd(const FieldCtx& ctx, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(ctx, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(ctx, a);
}

Poly poly_derivative(const FieldCtx& ctx, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<Element> out(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) {
    out[k - 1] = ctx.mul(ctx.from_int(static_cast<std::int64_t>(k % ctx.p())), a.coeffs()[k]);
  }
  return Poly{std::move(out)};
}

Poly poly_shift(const FieldCtx& ctx, const Poly& f, Element c) {
  // Horner in the ring: f(x + c) = (...(f_n (x + c) + f_{n-1})(x + c) + ...).
  const Poly lin{c, ctx.one()};
  Poly acc;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = poly_add(ctx, poly_mul(ctx, acc, lin), Poly::constant(f.coeffs()[k]));
  }
  return acc;
}

Poly poly_reverse(const Poly& f, std::size_t declared_degree) {
  if (f.degree() > static_cast<long>(declared_degree)) {
    throw Error("poly: declared degree below actual degree");
  }
  std::vector<Element> out(declared_degree + 1);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[declared_degree - k] = f.coeffs()[k];
  return Poly{std::move(out)};
}

Element poly_eval(const FieldCtx& ctx, const Poly& f, Element x0) {
  const auto& c = f.coeffs();
  const std::size_t nnz = f.nonzero_terms();
  const std::size_t pow_cost = 2 * std::bit_width(c.size());
  if (c.size() > 16 && nnz * pow_cost < c.size()) {
    Element sum = ctx.zero();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) sum = ctx.add(sum, ctx.mul(c[k], ctx.pow(x0, k)));
    }
    return sum;
  }
  Element acc = ctx.zero();
  for (std::size_t k = c.size(); k-- > 0;) acc = ctx.add(ctx.mul(acc, x0), c[k]);
  return acc;
}

RootSet root_count(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) throw Error("poly: the zero polynomial has every point as a root");
  if (ctx.q() > kEnumerationCap) {
    throw CapError("poly: root scan requires q <= 3^9, got q = " + std::to_string(ctx.q()));
  }
  RootSet out;
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    if (poly_eval(ctx, f, Element{v}).is_zero()) out.roots.emplace_back(v);
  }
  out.count = out.roots.size();
  return out;
}

Element determinant(const FieldCtx& ctx, std::vector<std::vector<Element>> rows) {
  const std::size_t n = rows.size();
  Element det = ctx.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && rows[piv][k].is_zero()) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != k) {
      std::swap(rows[piv], rows[k]);
      det = ctx.neg(det);
    }
    det = ctx.mul(det, rows[k][k]);
    const Element inv = ctx.inv(rows[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (rows[i][k].is_zero()) continue;
      const Element factor = ctx.mul(rows[i][k], inv);
      for (std::size_t j = k; j < n; ++j) {
        rows[i][j] = ctx.sub(rows[i][j], ctx.mul(factor, rows[k][j]));
      }
    }
  }
  return det;
}

Poly determinant(const FieldCtx& ctx, std::vector<std::vector<Poly>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return Poly::constant(ctx.one());
  bool negate = false;
  Poly prev = Poly::constant(ctx.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (rows[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && rows[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(rows[piv], rows[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = poly_sub(ctx, poly_mul(ctx, rows[k][k], rows[i][j]),
                            poly_mul(ctx, rows[i][k], rows[k][j]));
        rows[i][j] = poly_exact_div(ctx, num, prev);
      }
      rows[i][k] = Poly{};
    }
    prev = rows[k][k];
  }
  Poly det = rows[n - 1][n - 1];
  return negate ? poly_neg(ctx, det) : det;
}

Element resultant(const FieldCtx& ctx, const Poly& u, const Poly& v) {
  if (u.is_zero() || v.is_zero()) throw Error("resultant: zero input polynomial");
  return determinant(ctx, sylvester_matrix(high_first(u), high_first(v), ctx.zero()));
}

Poly resultant_in_y(const FieldCtx& ctx, const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error("resultant_in_y: zero input polynomial");
  if (f.y_degree() == 0 && g.y_degree() == 0) {
    throw Error("resultant_in_y: both inputs have y-degree 0");
  }
  std::vector<Poly> fh(f.y_coeffs().rbegin(), f.y_coeffs().rend());
  std::vector<Poly> gh(g.y_coeffs().rbegin(), g.y_coeffs().rend());
  return determinant(ctx, sylvester_matrix(fh, gh, Poly{}));
}

Poly bipoly_at_x(const FieldCtx& ctx, const BiPoly& f, Element x0) {
  std::vector<Element> out;
  out.reserve(f.y_coeffs().size());
  for (const auto& c : f.y_coeffs()) out.push_back(poly_eval(ctx, c, x0));
  return Poly{std::move(out)};
}

Element bipoly_eval(const FieldCtx& ctx, const BiPoly& f, Element x0, Element y0) {
  return poly_eval(ctx, bipoly_at_x(ctx, f, x0), y0);
}

}  // namespace idist
