#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "idist/distribution.hpp"
#include "idist/exponents.hpp"
#include "idist/field.hpp"
#include "idist/poly.hpp"

namespace idist {

enum class CheckStatus { pass, fail, skipped };

std::string_view status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  /// Offending inputs and both sides of the failed comparison; null on pass.
  nlohmann::json witness;
  /// Informational payload (scalars, counts, skip reasons).
  nlohmann::json detail;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string family;
  int m = 0;
  std::optional<BigInt> d;
  std::optional<BigInt> d_inv;
  std::vector<Check> checks;
  /// Intersection distribution of x^d, when it was computed.
  std::optional<Distribution> distribution;

  /// fail if any check failed, otherwise skipped if any check was skipped,
  /// otherwise pass.
  [[nodiscard]] CheckStatus overall() const;
  void append(VerificationReport other);
};

struct HarnessOptions {
  unsigned workers = 1;
};

/// Largest field for the bivariate resultant identity sweep (3^7).
inline constexpr std::uint64_t kResultantCap = 2187;

/// exponent suite, monomial criterion, substitution check, distribution of
/// x^d, multiplicity multisets of x^d and x^{d^-1}, distribution of x^{d^-1}.
/// Checks beyond the enumeration cap are reported as skipped.
VerificationReport verify_case(const FieldCtx& ctx, const ExponentFamily& family,
                               const HarnessOptions& opts = {});

/// Bivariate resultant of the two shift equations for h1 against its
/// factored form, for every a outside F_3 with b = a^{3^{(m-1)/2}}.
VerificationReport verify_resultant_identity(const FieldCtx& ctx, const HarnessOptions& opts = {});

/// The closed-form nonzero solution x* of h1(x+a) = h1(a) and the size of
/// the zero fiber, for every a, plus the a = 0 and a = 2 special cases.
VerificationReport verify_closed_form(const FieldCtx& ctx, const HarnessOptions& opts = {});

/// Numerator identity for h2(x+a) - h2(a), root count of its cubic cofactor,
/// and agreement with reduce_case_ii.
VerificationReport verify_case_ii_equations(const FieldCtx& ctx, const HarnessOptions& opts = {});

/// verify_case followed by the family's proof-internal identity checks.
VerificationReport verify_family(const FieldCtx& ctx, const ExponentFamily& family,
                                 const HarnessOptions& opts = {});

/// b = a^{3^{(m-1)/2}}.
Element case_i_b(const FieldCtx& ctx, Element a);

/// F(x, y) and G(x, y), the h1 shift equation and its 3^{(m+1)/2}-th power image.
BiPoly case_i_f(const FieldCtx& ctx, Element a, Element b);
BiPoly case_i_g(const FieldCtx& ctx, Element a, Element b);

/// x (x+a)^2 (x+a+2) ((b+2)^3 (a^2 b^3 + 2)^2 x - (ab^2+ab+1)^3 (a^2 b^3 + a b^3 + 1)).
Poly case_i_factored_resultant(const FieldCtx& ctx, Element a, Element b);

/// (ab^2+ab+1)^3 (a^2b^3+ab^3+1) / ((b+2)^3 (a^2b^3+2)^2), or nullopt if the
/// denominator vanishes.
std::optional<Element> case_i_closed_form(const FieldCtx& ctx, Element a, Element b);

/// (a^2+a+1) x^4 + (a^3+2a^2+2a+1) x^3 + (2a^4+2a^3) x^2 + (2a^5+a^4) x.
Poly case_ii_quartic(const FieldCtx& ctx, Element a);

}  // namespace idist
