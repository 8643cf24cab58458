#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "idist/field.hpp"

namespace idist {

/// Dense univariate polynomial over a field, constant term first. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Element> coeffs);
  Poly(std::initializer_list<Element> coeffs) : Poly(std::vector<Element>(coeffs)) {}

  static Poly constant(Element c) { return Poly{std::vector<Element>{c}}; }
  /// c * x^k.
  static Poly monomial(Element c, std::size_t k);
  /// Builds from small integers reduced into the prime field.
  static Poly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs);

  [[nodiscard]] const std::vector<Element>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] Element leading() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }
  /// Coefficient of x^k (zero past the degree).
  [[nodiscard]] Element operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Element{};
  }
  [[nodiscard]] std::size_t nonzero_terms() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// Bivariate polynomial viewed as a polynomial in y with coefficients in F_q[x].
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> y_coeffs);

  [[nodiscard]] const std::vector<Poly>& y_coeffs() const { return y_coeffs_; }
  [[nodiscard]] bool is_zero() const { return y_coeffs_.empty(); }
  [[nodiscard]] long y_degree() const { return static_cast<long>(y_coeffs_.size()) - 1; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Poly> y_coeffs_;
};

// Ring operations.
Poly poly_add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_neg(const FieldCtx& ctx, const Poly& a);
Poly poly_scale(const FieldCtx& ctx, const Poly& a, Element c);
Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_pow(const FieldCtx& ctx, const Poly& a, unsigned e);
/// Quotient and remainder; throws Error on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& a, const Poly& b);
/// Quotient of a division that must be exact; throws Error otherwise.
Poly poly_exact_div(const FieldCtx& ctx, const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const FieldCtx& ctx, Poly a, Poly b);
/// Scales to leading coefficient one; the zero polynomial is returned unchanged.
Poly poly_monic(const FieldCtx& ctx, const Poly& a);
Poly poly_derivative(const FieldCtx& ctx, const Poly& a);
/// f(x + c).
Poly poly_shift(const FieldCtx& ctx, const Poly& f, Element c);
/// x^deg(f) * f(1/x) with the declared degree, i.e. the coefficient reversal.
Poly poly_reverse(const Poly& f, std::size_t declared_degree);

/// Horner evaluation; sparse high-degree inputs (e.g. x^d - 1) are evaluated
/// term by term with square-and-multiply.
Element poly_eval(const FieldCtx& ctx, const Poly& f, Element x0);

struct RootSet {
  std::size_t count = 0;
  std::vector<Element> roots;  // increasing encoding order
};

/// Distinct roots in F_q by exhaustive scan (q <= 3^9). Throws on the zero polynomial.
RootSet root_count(const FieldCtx& ctx, const Poly& f);

/// Determinant of the Sylvester matrix of u and v over the field.
Element resultant(const FieldCtx& ctx, const Poly& u, const Poly& v);

/// Resultant with respect to y of two bivariate polynomials; fraction-free
/// elimination over F_q[x].
Poly resultant_in_y(const FieldCtx& ctx, const BiPoly& f, const BiPoly& g);

/// Substitutes x = x0, giving a polynomial in y.
Poly bipoly_at_x(const FieldCtx& ctx, const BiPoly& f, Element x0);
Element bipoly_eval(const FieldCtx& ctx, const BiPoly& f, Element x0, Element y0);

/// Determinant of a square matrix over the field (Gaussian elimination).
Element determinant(const FieldCtx& ctx, std::vector<std::vector<Element>> rows);

/// Determinant over F_q[x] using Bareiss fraction-free elimination.
Poly determinant(const FieldCtx& ctx, std::vector<std::vector<Poly>> rows);

/// Sylvester matrix with rows of a's coefficients (highest first) then b's.
template <typename T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& a_high_first,
                                             const std::vector<T>& b_high_first,
                                             const T& zero) {
  const std::size_t da = a_high_first.size() - 1;
  const std::size_t db = b_high_first.size() - 1;
  const std::size_t n = da + db;
  std::vector<std::vector<T>> rows(n, std::vector<T>(n, zero));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t i = 0; i <= da; ++i) rows[r][r + i] = a_high_first[i];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t i = 0; i <= db; ++i) rows[db + r][r + i] = b_high_first[i];
  }
  return rows;
}

}  // namespace idist
