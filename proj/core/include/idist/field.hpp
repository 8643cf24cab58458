#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace idist {

/// Largest extension degree a FieldCtx accepts; p^m must also stay below 2^62.
inline constexpr int kMaxDegree = 40;

/// Distribution, 2-to-1 and exhaustive-scan operations refuse fields larger than 3^9.
inline constexpr std::uint64_t kEnumerationCap = 19683;

/// An element of F_{p^m}, held as its canonical base-p integer encoding
/// enc(e) = sum coeffs[i] * p^i. The encoding is only meaningful together
/// with the FieldCtx that produced it.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint64_t enc) : enc_(enc) {}

  [[nodiscard]] constexpr std::uint64_t enc() const { return enc_; }
  [[nodiscard]] constexpr bool is_zero() const { return enc_ == 0; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint64_t enc_ = 0;
};

/// Coefficient digits of an element, constant term first; entries past m are zero.
using Digits = std::array<std::uint8_t, kMaxDegree>;

/// Arithmetic context for F_{p^m} = F_p[x] / (modulus). Immutable after
/// construction and safe to share across threads.
class FieldCtx {
 public:
  /// Validates p and the modulus. With no modulus, the built-in default
  /// table is consulted (p = 3, 1 <= m <= 13).
  static FieldCtx create(std::uint32_t p, int m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  [[nodiscard]] std::uint32_t p() const { return p_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] std::uint64_t q() const { return q_; }
  /// Monic modulus, constant term first, length m + 1.
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  [[nodiscard]] Element zero() const { return Element{0}; }
  [[nodiscard]] Element one() const { return Element{1}; }
  /// Image of the integer n under Z -> F_p -> F_q.
  [[nodiscard]] Element from_int(std::int64_t n) const;
  /// Class of x modulo the modulus (the element whose encoding is p when m > 1).
  [[nodiscard]] Element generator() const;

  /// Throws if enc is not in [0, q).
  [[nodiscard]] Element element(std::uint64_t enc) const;
  [[nodiscard]] Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(Element e) const;

  [[nodiscard]] Digits to_digits(Element e) const;
  [[nodiscard]] Element from_digits(const Digits& d) const;

  [[nodiscard]] Element add(Element a, Element b) const;
  [[nodiscard]] Element sub(Element a, Element b) const;
  [[nodiscard]] Element neg(Element a) const;
  [[nodiscard]] Element mul(Element a, Element b) const;
  /// Throws Error on zero.
  [[nodiscard]] Element inv(Element a) const;
  /// a / b; throws Error when b is zero.
  [[nodiscard]] Element div(Element a, Element b) const;
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const;
  /// x -> x^p.
  [[nodiscard]] Element frobenius(Element a) const;

  /// Tr_{sub_degree}^{m}(e) = sum_j e^{p^{sub_degree * j}}.
  [[nodiscard]] Element trace(Element e, int sub_degree = 1) const;
  /// True for zero and for e with e^{(q-1)/2} = 1.
  [[nodiscard]] bool is_square(Element e) const;
  /// Some c with c^2 = e, or nullopt for non-squares.
  [[nodiscard]] std::optional<Element> sqrt(Element e) const;
  /// The unique r with r^p = e (Frobenius is bijective).
  [[nodiscard]] Element pth_root(Element e) const;

  /// True when e lies in the prime field F_p.
  [[nodiscard]] bool in_prime_field(Element e) const { return e.enc() < p_; }

  /// All q elements in encoding order.
  [[nodiscard]] std::vector<Element> elements() const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  int m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  // reduction_[k - m] holds x^k mod modulus for m <= k <= 2m - 2.
  std::vector<Digits> reduction_;
  std::optional<Element> non_residue_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility over F_p (coefficients constant term first).
/// Degree <= 3 uses root exclusion; larger degrees use the Rabin gcd test.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Entry of the built-in modulus table, if present.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, int m);

}  // namespace idist
