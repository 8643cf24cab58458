#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "idist/field.hpp"
#include "idist/poly.hpp"

namespace idist {

/// Factorization pattern of x^3 + a x + b over the base field.
enum class CubicType {
  split,      // (1,1,1)
  one_root,   // (1,2)
  irreducible // (3)
};

std::string_view cubic_type_name(CubicType t);

struct CubicClassification {
  CubicType type = CubicType::split;
  /// a = 0: x^3 + b = (x - r)^3, a single root of multiplicity three.
  bool triple_root = false;
  /// The square root c of -a used by the trace test (a != 0, -a square).
  std::optional<Element> c;
};

/// Trace criterion over F_{3^n}: for a != 0, -a = c^2 with Tr(b/c^3) = 0 gives
/// (1,1,1), Tr != 0 gives (3), and -a a non-square gives (1,2). For a = 0 the
/// cubic is a perfect cube and (1,1,1) is returned with triple_root set.
CubicClassification classify_cubic(const FieldCtx& ctx, Element a, Element b);

/// Exhaustive root scan of x^3 + a x + b; independent of classify_cubic.
RootSet cubic_root_oracle(const FieldCtx& ctx, Element a, Element b);

/// Maps a distinct-root count (and the a = 0 flag) to the expected type.
CubicType type_from_root_count(std::size_t distinct_roots, bool a_is_zero);

struct CaseIIReduction {
  Element a;
  /// H(x) = x^3 + (a+1) x^2 + (2a^4+2a^3)/(a^2+a+1) x + (2a^5+a^4)/(a^2+a+1).
  Poly h;
  /// x^3 H(1/x + shift), computed by shifting and reversing H.
  Poly h_tilde;
  /// Monic depressed cubic obtained by scaling h_tilde.
  Poly m_poly;
  /// 2a^3 / (a^2+a+1).
  Element shift;
  /// h_tilde equals (a^5+a^4)/(a^2+a+1)^3 x^3 + (a+1) x + 1.
  bool h_tilde_matches_closed_form = false;
  /// m_poly equals x^3 + (a^2+a+1)^3/a^4 x + (a^2+a+1)^3/(a^5+a^4).
  bool m_matches_closed_form = false;
  /// -(a^2+a+1)^3/a^4 = -((a^2+a+1)(a-1)/a^2)^2.
  bool square_identity = false;
  /// -(a^2+a+1)^3/a^4 is a non-square.
  bool linear_coeff_nonsquare = false;
  CubicClassification m_type;
  /// Roots of H and M correspond under x -> 1/(x - shift). Only computed
  /// when q is within the enumeration cap.
  std::optional<bool> roots_correspond;
  std::vector<Element> h_roots;
  std::vector<Element> m_roots;

  /// M(x) has type (1,2) and every algebraic step checked out, hence H has
  /// exactly one root in F_q.
  [[nodiscard]] bool verdict() const {
    return m_type.type == CubicType::one_root && h_tilde_matches_closed_form &&
           m_matches_closed_form && square_identity && linear_coeff_nonsquare;
  }
};

/// H(x), the cubic cofactor of the h2 shift equation divided by x; needs a^2 + a + 1 != 0.
Poly case_ii_cubic(const FieldCtx& ctx, Element a);

/// Builds H, its reciprocal shift and monic depressed form for a outside
/// F_3, and classifies the depressed cubic. Throws Error for a in F_3.
CaseIIReduction reduce_case_ii(const FieldCtx& ctx, Element a);

}  // namespace idist
