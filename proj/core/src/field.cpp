#include "idist/field.hpp"

#include <algorithm>
#include <sstream>

#include "idist/error.hpp"

namespace idist {
namespace {

using FpPoly = std::vector<std::uint32_t>;

// Lexicographically smallest monic irreducible of each degree over F_3,
// ordered on coefficient tuples read from the constant term upward.
const std::vector<FpPoly> kDefaultModuliP3 = {
    {0, 1},
    {1, 0, 1},
    {1, 0, 2, 1},
    {1, 0, 1, 1, 1},
    {1, 0, 0, 0, 2, 1},
    {1, 0, 0, 0, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 2, 1},
    {1, 0, 0, 0, 0, 1, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, 2, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1},
};

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return fp_rem(std::move(r), f, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint32_t p) {
  FpPoly result{1};
  base = fp_rem(std::move(base), f, p);
  for (; e; e >>= 1) {
    if (e & 1) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  FpPoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  for (auto c : f) {
    if (c >= p) return false;
  }
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (m <= 3) {
    for (std::uint32_t r = 0; r < p; ++r) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * r + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin: f | x^{p^m} - x and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m.
  auto frobenius_power = [&](std::size_t k) {
    FpPoly x_pow{0, 1};
    for (std::size_t i = 0; i < k; ++i) x_pow = fp_powmod(x_pow, p, f, p);
    return x_pow;
  };
  auto minus_x = [&](FpPoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(frobenius_power(m)).empty()) return false;
  for (auto r : prime_factors(m)) {
    FpPoly g = fp_gcd(minus_x(frobenius_power(m / r)), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, int m) {
  if (p == 3 && m >= 1 && m <= static_cast<int>(kDefaultModuliP3.size())) {
    return kDefaultModuliP3[m - 1];
  }
  return std::nullopt;
}

FieldCtx FieldCtx::create(std::uint32_t p, int m,
                          std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p) || p == 2 || p > 251) {
    throw Error("field: p must be an odd prime below 256, got " + std::to_string(p));
  }
  if (m < 1 || m > kMaxDegree) {
    throw Error("field: extension degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw Error("field: p^m exceeds the native word");
    q *= p;
  }
  if (!modulus) {
    modulus = default_modulus(p, m);
    if (!modulus) {
      throw Error("field: no default modulus for p=" + std::to_string(p) +
                  ", m=" + std::to_string(m) + "; pass one explicitly");
    }
  }
  if (modulus->size() != static_cast<std::size_t>(m) + 1 || modulus->back() != 1) {
    throw Error("field: modulus must be monic of degree " + std::to_string(m));
  }
  if (!is_irreducible(p, *modulus)) throw Error("field: modulus is reducible over F_p");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = q;
  ctx.modulus_ = *modulus;

  // x^m = -(f_0 + ... + f_{m-1} x^{m-1}); higher powers follow by shifting.
  Digits cur{};
  for (int i = 0; i < m; ++i) cur[i] = static_cast<std::uint8_t>((p - ctx.modulus_[i]) % p);
  for (int k = m; k <= 2 * m - 2 || k == m; ++k) {
    ctx.reduction_.push_back(cur);
    Digits next{};
    const std::uint32_t top = cur[m - 1];
    for (int i = m - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < m; ++i) {
      next[i] = static_cast<std::uint8_t>(
          (next[i] + top * ((p - ctx.modulus_[i]) % p)) % p);
    }
    cur = next;
  }

  if (q % 4 == 1) {
    for (std::uint64_t e = 2; e < q; ++e) {
      if (!ctx.is_square(Element{e})) {
        ctx.non_residue_ = Element{e};
        break;
      }
    }
  }
  return ctx;
}

Element FieldCtx::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return Element{static_cast<std::uint64_t>(((n % p) + p) % p)};
}

Element FieldCtx::generator() const {
  if (m_ > 1) return Element{p_};
  return from_int(-static_cast<std::int64_t>(modulus_[0]));
}

Element FieldCtx::element(std::uint64_t enc) const {
  if (enc >= q_) {
    throw Error("field: encoding " + std::to_string(enc) + " outside [0, " +
                std::to_string(q_) + ")");
  }
  return Element{enc};
}

Element FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(m_)) {
    throw Error("field: too many coefficients for degree " + std::to_string(m_));
  }
  Digits d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw Error("field: coefficient out of range");
    d[i] = static_cast<std::uint8_t>(coeffs[i]);
  }
  return from_digits(d);
}

std::vector<std::uint32_t> FieldCtx::coeffs(Element e) const {
  const Digits d = to_digits(e);
  return {d.begin(), d.begin() + m_};
}

Digits FieldCtx::to_digits(Element e) const {
  Digits d{};
  std::uint64_t v = e.enc();
  for (int i = 0; i < m_; ++i) {
    d[i] = static_cast<std::uint8_t>(v % p_);
    v /= p_;
  }
  return d;
}

Element FieldCtx::from_digits(const Digits& d) const {
  std::uint64_t v = 0;
  for (int i = m_; i-- > 0;) v = v * p_ + d[i];
  return Element{v};
}

Element FieldCtx::add(Element a, Element b) const {
  if (m_ == 1) return Element{(a.enc() + b.enc()) % p_};
  const Digits da = to_digits(a), db = to_digits(b);
  Digits r{};
  for (int i = 0; i < m_; ++i) {
    const unsigned s = da[i] + db[i];
    r[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
  }
  return from_digits(r);
}

Element FieldCtx::neg(Element a) const {
  Digits d = to_digits(a);
  for (int i = 0; i < m_; ++i) d[i] = static_cast<std::uint8_t>(d[i] ? p_ - d[i] : 0);
  return from_digits(d);
}

Element FieldCtx::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldCtx::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (m_ == 1) return Element{a.enc() * b.enc() % p_};
  const Digits da = to_digits(a), db = to_digits(b);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  }
  std::array<std::uint64_t, kMaxDegree> acc{};
  for (int i = 0; i < m_; ++i) acc[i] = prod[i];
  for (int k = m_; k <= 2 * m_ - 2; ++k) {
    const std::uint64_t c = prod[k] % p_;
    if (!c) continue;
    const Digits& red = reduction_[k - m_];
    for (int i = 0; i < m_; ++i) acc[i] += c * red[i];
  }
  Digits r{};
  for (int i = 0; i < m_; ++i) r[i] = static_cast<std::uint8_t>(acc[i] % p_);
  return from_digits(r);
}

Element FieldCtx::pow(Element a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Element FieldCtx::inv(Element a) const {
  if (a.is_zero()) throw Error("field: inverse of zero");
  return pow(a, q_ - 2);
}

Element FieldCtx::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FieldCtx::frobenius(Element a) const { return pow(a, p_); }

Element FieldCtx::trace(Element e, int sub_degree) const {
  if (sub_degree < 1 || m_ % sub_degree != 0) {
    throw Error("field: trace sub-degree " + std::to_string(sub_degree) +
                " does not divide " + std::to_string(m_));
  }
  Element sum = zero();
  Element term = e;
  for (int j = 0; j < m_ / sub_degree; ++j) {
    sum = add(sum, term);
    for (int k = 0; k < sub_degree; ++k) term = frobenius(term);
  }
  return sum;
}

bool FieldCtx::is_square(Element e) const {
  return e.is_zero() || pow(e, (q_ - 1) / 2) == one();
}

std::optional<Element> FieldCtx::sqrt(Element e) const {
  if (e.is_zero()) return zero();
  if (!is_square(e)) return std::nullopt;
  if (q_ % 4 == 3) return pow(e, (q_ + 1) / 4);

  // Tonelli-Shanks with q - 1 = 2^s * t, t odd.
  std::uint64_t t = q_ - 1;
  int s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Element z = pow(*non_residue_, t);
  Element x = pow(e, (t + 1) / 2);
  Element b = pow(e, t);
  int r = s;
  while (b != one()) {
    int i = 0;
    for (Element b2 = b; b2 != one(); b2 = mul(b2, b2)) ++i;
    Element g = z;
    for (int j = 0; j < r - i - 1; ++j) g = mul(g, g);
    x = mul(x, g);
    z = mul(g, g);
    b = mul(b, z);
    r = i;
  }
  return x;
}

Element FieldCtx::pth_root(Element e) const { return pow(e, q_ / p_); }

std::vector<Element> FieldCtx::elements() const {
  if (q_ > (std::uint64_t{1} << 32)) throw CapError("field: too large to enumerate");
  std::vector<Element> out;
  out.reserve(q_);
  for (std::uint64_t v = 0; v < q_; ++v) out.emplace_back(v);
  return out;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << p_ << "^" << m_ << " (q = " << q_ << "), modulus ";
  bool first = true;
  for (int i = m_; i >= 0; --i) {
    const auto c = modulus_[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace idist
