#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idist/exponents.hpp"
#include "idist/field.hpp"
#include "idist/poly.hpp"

namespace idist {

/// A function on an explicit finite domain inside F_q: a polynomial, a
/// rational function whose denominator is nonzero on the domain, or a
/// monomial x^e.
class EvaluableMap {
 public:
  enum class Kind { polynomial, rational, monomial };

  static EvaluableMap polynomial(const FieldCtx& ctx, Poly f, std::vector<Element> domain);
  /// Throws Error if den vanishes anywhere on the domain.
  static EvaluableMap rational(const FieldCtx& ctx, Poly num, Poly den,
                               std::vector<Element> domain);
  static EvaluableMap monomial(const FieldCtx& ctx, std::uint64_t exponent,
                               std::vector<Element> domain);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const FieldCtx& field() const { return ctx_; }
  [[nodiscard]] const std::vector<Element>& domain() const { return domain_; }
  [[nodiscard]] Element operator()(Element x) const;

 private:
  EvaluableMap(const FieldCtx& ctx, Kind kind, std::vector<Element> domain)
      : ctx_(ctx), kind_(kind), domain_(std::move(domain)) {}

  FieldCtx ctx_;
  Kind kind_;
  std::vector<Element> domain_;
  Poly num_;
  Poly den_;
  std::uint64_t exponent_ = 0;
};

/// F_q without the listed points, in encoding order.
std::vector<Element> domain_excluding(const FieldCtx& ctx, std::initializer_list<Element> removed);

struct Fiber {
  Element value;
  std::vector<Element> preimages;
};

struct TwoToOneResult {
  bool two_to_one = false;
  std::size_t image_size = 0;
  /// A fiber of size 1 or >= 3 when two_to_one is false.
  std::optional<Fiber> witness;
};

/// Every nonempty fiber has exactly two points. Odd domains are rejected.
TwoToOneResult is_two_to_one(const EvaluableMap& map);

/// g_d(x) = (x^d - 1)/(x - 1) on F_q \ {1}.
EvaluableMap g_map(const FieldCtx& ctx, std::uint64_t d);
/// h1(x) = (x^{2s+1} - 1)/(x^s - 1), s = 3^{(m-1)/2}, on F_q \ {1}.
EvaluableMap h1_map(const FieldCtx& ctx);
/// h2(x) = (x^4 + x^3 + x^2 + x + 1)/(x^2 + x + 1) on F_q \ {1}.
EvaluableMap h2_map(const FieldCtx& ctx);

struct KlyResult {
  std::uint64_t d = 0;
  std::uint64_t gcd_d_minus_1 = 0;
  bool gcd_ok = false;
  TwoToOneResult g_two_to_one;
  [[nodiscard]] bool holds() const { return gcd_ok && g_two_to_one.two_to_one; }
};

/// Monomial criterion over F_{3^m}: gcd(d-1, q-1) = 2 and g_d is 2-to-1 on
/// F_q \ {1}. Requires 2 <= d <= q - 1.
KlyResult kly_criterion(const FieldCtx& ctx, std::uint64_t d);

struct QmResult {
  Family family = Family::case_i;
  std::uint64_t substitution_exponent = 0;
  bool substitution_is_permutation = false;
  bool functions_agree = false;
  /// First point where g_d(x^e) and the closed form differ.
  std::optional<Element> mismatch_at;
  [[nodiscard]] bool pass() const { return substitution_is_permutation && functions_agree; }
};

/// case_i: g_d(x^{3^{(m-1)/2}}) = h1 on F_q \ {1}; case_ii: g_d(x^3) = h2.
QmResult qm_substitution_check(const FieldCtx& ctx, const ExponentFamily& family);

/// Exhaustive check that x -> x^e permutes F_q.
bool is_permutation_monomial(const FieldCtx& ctx, std::uint64_t e);

std::uint64_t to_u64(const BigInt& v);

}  // namespace idist
