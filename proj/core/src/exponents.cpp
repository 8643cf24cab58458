#include "idist/exponents.hpp"

#include <algorithm>
#include <numeric>

#include "idist/error.hpp"

namespace idist {

std::string_view family_name(Family f) {
  return f == Family::case_i ? "case_i" : "case_ii";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "i" || s == "case_i" || s == "1") return Family::case_i;
  if (s == "ii" || s == "case_ii" || s == "2") return Family::case_ii;
  return std::nullopt;
}

BigInt ipow(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& n) {
  // Extended Euclid on (a mod n, n).
  BigInt old_r = ((a % n) + n) % n, r = n;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quot * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) return std::nullopt;
  return ((old_s % n) + n) % n;
}

ExponentFamily ExponentFamily::make(Family family, int m) {
  if (m < 1 || m % 2 == 0) {
    throw Error("exponent family requires odd m >= 1, got m = " + std::to_string(m));
  }
  ExponentFamily out;
  out.family = family;
  out.m = m;
  out.q_minus_1 = ipow(3, m) - 1;
  if (family == Family::case_i) {
    out.d = ipow(3, (m + 1) / 2) + 2;
  } else {
    out.d = 2 * ipow(3, m - 1) + 1;
  }
  out.d_inv = mod_inverse(out.d, out.q_minus_1);
  return out;
}

bool ExponentReport::pass() const {
  if (gcd_d_minus_1 != 2 || gcd_d != 1 || !d_inv) return false;
  if ((d * *d_inv) % q_minus_1 != 1 % q_minus_1) return false;
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

ExponentReport exponent_suite(const ExponentFamily& family) {
  const int m = family.m;
  if (m < 1 || m % 2 == 0) throw Error("exponent suite requires odd m");

  ExponentReport r;
  r.family = family.family;
  r.m = m;
  r.d = family.d;
  r.q_minus_1 = family.q_minus_1;
  r.gcd_d_minus_1 = gcd(r.d - 1, r.q_minus_1);
  r.gcd_d = gcd(r.d, r.q_minus_1);
  r.d_inv = mod_inverse(r.d, r.q_minus_1);

  const BigInt q = ipow(3, m);
  if (family.family == Family::case_i) {
    const unsigned k = static_cast<unsigned>((m + 1) / 2);
    const BigInt s = ipow(3, (m - 1) / 2);
    // d - 1 = 3^k + 1 with m / gcd(m, k) odd gives gcd(d - 1, q - 1) = 2.
    r.identities.push_back(
        {"d-1 = 3^k+1 with m/gcd(m,k) odd", r.d - 1 == ipow(3, k) + 1 &&
                                                 (m / std::gcd(m, static_cast<int>(k))) % 2 == 1});
    r.identities.push_back(
        {"3^m-1 = d*(3^((m-1)/2)-1) + 3^((m-1)/2)+1", q - 1 == r.d * (s - 1) + s + 1});
    r.identities.push_back({"d = 3*(3^((m-1)/2)+1) - 1", r.d == 3 * (s + 1) - 1});
  } else {
    const BigInt t = ipow(3, m - 1);
    r.identities.push_back({"gcd(2*3^(m-1), 3^m-1) = gcd(2, 3^m-1) = 2",
                            gcd(2 * t, q - 1) == gcd(BigInt(2), q - 1) && gcd(BigInt(2), q - 1) == 2});
    r.identities.push_back({"3^m-1 - d = 3^(m-1)-2", q - 1 - r.d == t - 2});
    r.identities.push_back({"d = 2*(3^(m-1)-2) + 5", r.d == 2 * (t - 2) + 5});
    r.identities.push_back({"5 does not divide 3^(m-1)-2", (t - 2) % 5 != 0});
  }
  return r;
}

}  // namespace idist
