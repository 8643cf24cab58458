#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Coeffs = std::vector<int>;  // constant term first

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs decode(std::uint64_t enc, int p, int m) {
  Coeffs c(m, 0);
  for (int i = 0; i < m; ++i) {
    c[i] = static_cast<int>(enc % p);
    enc /= p;
  }
  return c;
}

inline std::uint64_t encode(const Coeffs& c, int p) {
  std::uint64_t e = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) e = e * p + static_cast<std::uint64_t>(*it);
  return e;
}

// Remainder of a modulo monic b over F_p.
inline Coeffs mod(Coeffs a, const Coeffs& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = ((a[i] % p) + p) % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  a.resize(std::max(0, db));
  for (auto& x : a) x = ((x % p) + p) % p;
  return a;
}

// Schoolbook field product of encodings.
struct Field {
  int p;
  int m;
  Coeffs modulus;
  std::uint64_t q;

  Field(int p_, int m_, Coeffs mod_) : p(p_), m(m_), modulus(std::move(mod_)), q(1) {
    for (int i = 0; i < m; ++i) q *= static_cast<std::uint64_t>(p);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a, p, m), y = decode(b, p, m);
    for (int i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x, p);
  }
  std::uint64_t neg(std::uint64_t a) const {
    auto x = decode(a, p, m);
    for (auto& v : x) v = (p - v) % p;
    return encode(x, p);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a, p, m), y = decode(b, p, m);
    Coeffs prod(2 * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    return encode(mod(prod, modulus, p), p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  // Evaluation of a polynomial with encoded coefficients by repeated products.
  std::uint64_t eval(const std::vector<std::uint64_t>& f, std::uint64_t x) const {
    std::uint64_t acc = 0, xp = 1;
    for (auto c : f) {
      acc = add(acc, mul(c, xp));
      xp = mul(xp, x);
    }
    return acc;
  }
};

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2.
inline bool irreducible(const Coeffs& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t e = 0; e < count; ++e) {
      Coeffs g = decode(e, p, d);
      g.push_back(1);
      if (trim(mod(f, g, p)).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m, comparing the
// coefficient vector from the constant term upward.
inline Coeffs smallest_irreducible(int p, int m) {
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= static_cast<std::uint64_t>(p);
  // Enumerate with the constant term as the most significant digit so the
  // first irreducible found is the minimum.
  for (std::uint64_t e = 0; e < count; ++e) {
    Coeffs f = decode(e, p, m);
    std::reverse(f.begin(), f.end());
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  return {};
}

// v_i(f) from the definition: for every (b, c) count solutions of f(x) = bx + c.
inline std::map<std::uint64_t, std::uint64_t> intersection(const Field& F,
                                                           const std::vector<std::uint64_t>& f) {
  std::vector<std::uint64_t> fx(F.q);
  for (std::uint64_t x = 0; x < F.q; ++x) fx[x] = F.eval(f, x);
  std::map<std::uint64_t, std::uint64_t> v;
  for (std::uint64_t b = 0; b < F.q; ++b) {
    std::vector<std::uint64_t> bx(F.q);
    for (std::uint64_t x = 0; x < F.q; ++x) bx[x] = F.mul(b, x);
    for (std::uint64_t c = 0; c < F.q; ++c) {
      std::uint64_t n = 0;
      for (std::uint64_t x = 0; x < F.q; ++x) n += fx[x] == F.add(bx[x], c) ? 1 : 0;
      ++v[n];
    }
  }
  return v;
}

}  // namespace oracle
