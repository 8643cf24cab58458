#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idist {

using BigInt = boost::multiprecision::cpp_int;

/// The two monomial exponent families over F_{3^m}, m odd:
///   case_i:  d = 3^{(m+1)/2} + 2
///   case_ii: d = 2 * 3^{m-1} + 1
enum class Family { case_i, case_ii };

std::string_view family_name(Family f);
/// Accepts "i", "ii", "case_i", "case_ii".
std::optional<Family> parse_family(std::string_view s);

struct ExponentFamily {
  Family family = Family::case_i;
  int m = 0;
  BigInt d;
  BigInt q_minus_1;
  std::optional<BigInt> d_inv;

  /// Throws Error for even or non-positive m.
  static ExponentFamily make(Family family, int m);
};

BigInt ipow(unsigned base, unsigned exp);
BigInt gcd(const BigInt& a, const BigInt& b);
/// Inverse of a modulo n in [0, n), if gcd(a, n) = 1.
std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& n);

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

struct ExponentReport {
  Family family = Family::case_i;
  int m = 0;
  BigInt d;
  BigInt q_minus_1;
  BigInt gcd_d_minus_1;
  BigInt gcd_d;
  std::optional<BigInt> d_inv;
  /// Euclid-chain and gcd identities used to establish the two gcd values.
  std::vector<IdentityCheck> identities;

  [[nodiscard]] bool pass() const;
};

/// gcd(d-1, q-1) = 2, gcd(d, q-1) = 1, d * d^{-1} = 1 mod q-1, plus the
/// family's Euclid-chain identities. Pure integer arithmetic, no field needed.
ExponentReport exponent_suite(const ExponentFamily& family);

}  // namespace idist
