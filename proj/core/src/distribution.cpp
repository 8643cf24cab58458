#include "idist/distribution.hpp"

#include <algorithm>
#include <thread>

#include "idist/error.hpp"

namespace idist {
namespace {

void check_cap(const FieldCtx& ctx) {
  if (ctx.q() > kEnumerationCap) {
    throw CapError("distribution: q = " + std::to_string(ctx.q()) +
                   " exceeds the enumeration cap 3^9 = " + std::to_string(kEnumerationCap));
  }
}

// Per-slope histogram kernel. Walks x through F_q in encoding order like an
// odometer so that b*x is maintained with one digit-wise addition per step:
// a step that wraps k low digits adds b * (1 + g + ... + g^k).
class SlopeKernel {
 public:
  SlopeKernel(const FieldCtx& ctx, const std::vector<Digits>& values)
      : ctx_(ctx), values_(values), hist_(ctx.q(), 0) {}

  Distribution run(Element b) {
    const int m = ctx_.m();
    const std::uint32_t p = ctx_.p();

    // step[k] = -b * (1 + g + ... + g^k), so that acc tracks -b*x.
    std::vector<Digits> step(m);
    Element basis_sum = ctx_.zero();
    std::uint64_t basis = 1;
    for (int k = 0; k < m; ++k) {
      basis_sum = ctx_.add(basis_sum, Element{basis});
      step[k] = ctx_.to_digits(ctx_.neg(ctx_.mul(b, basis_sum)));
      basis *= p;
    }

    Digits x{};
    Digits acc{};
    const std::uint64_t q = ctx_.q();
    for (std::uint64_t v = 0; v < q; ++v) {
      const Digits& fx = values_[v];
      std::uint64_t c = 0;
      for (int i = m; i-- > 0;) {
        unsigned s = fx[i] + acc[i];
        if (s >= p) s -= p;
        c = c * p + s;
      }
      ++hist_[c];

      int k = 0;
      while (k < m && x[k] == p - 1) x[k++] = 0;
      if (k == m) break;
      ++x[k];
      const Digits& d = step[k];
      for (int i = 0; i < m; ++i) {
        unsigned s = acc[i] + d[i];
        acc[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
      }
    }

    Distribution dist(q);
    std::uint64_t distinct = 0;
    for (auto& h : hist_) {
      if (h) {
        dist.add(h, 1);
        ++distinct;
        h = 0;
      }
    }
    dist.add(0, q - distinct);
    return dist;
  }

 private:
  const FieldCtx& ctx_;
  const std::vector<Digits>& values_;
  std::vector<std::uint32_t> hist_;
};

std::vector<Digits> tabulate(const FieldCtx& ctx, const Poly& f) {
  std::vector<Digits> values(ctx.q());
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    values[v] = ctx.to_digits(poly_eval(ctx, f, Element{v}));
  }
  return values;
}

}  // namespace

Distribution::Distribution(std::uint64_t q, std::map<std::uint64_t, std::uint64_t> counts)
    : q_(q) {
  for (auto [i, n] : counts) add(i, n);
}

std::uint64_t Distribution::at(std::uint64_t i) const {
  auto it = counts_.find(i);
  return it == counts_.end() ? 0 : it->second;
}

void Distribution::add(std::uint64_t i, std::uint64_t n) {
  if (n) counts_[i] += n;
}

Distribution& Distribution::operator+=(const Distribution& other) {
  if (q_ != other.q_) throw Error("distribution: mismatched field sizes");
  for (auto [i, n] : other.counts_) add(i, n);
  return *this;
}

std::uint64_t Distribution::total() const {
  std::uint64_t s = 0;
  for (auto [i, n] : counts_) s += n;
  return s;
}

std::uint64_t Distribution::weighted_total() const {
  std::uint64_t s = 0;
  for (auto [i, n] : counts_) s += i * n;
  return s;
}

Distribution multiplicity_distribution(const FieldCtx& ctx, const Poly& f, Element b) {
  check_cap(ctx);
  const auto values = tabulate(ctx, f);
  return SlopeKernel(ctx, values).run(ctx.element(b.enc()));
}

std::vector<Distribution> multiplicity_profile(const FieldCtx& ctx, const Poly& f,
                                               unsigned workers) {
  check_cap(ctx);
  const std::uint64_t q = ctx.q();
  const auto values = tabulate(ctx, f);
  std::vector<Distribution> out(q);

  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(q));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    SlopeKernel kernel(ctx, values);
    for (std::uint64_t b = begin; b < end; ++b) out[b] = kernel.run(Element{b});
  };
  if (workers == 1) {
    work(0, q);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (q + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(q, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  pool.clear();
  return out;
}

Distribution intersection_distribution(const FieldCtx& ctx, const Poly& f, unsigned workers) {
  Distribution total(ctx.q());
  for (const auto& row : multiplicity_profile(ctx, f, workers)) total += row;
  return total;
}

Distribution target_distribution(std::uint64_t q) {
  return Distribution(q, {{0, q * (q - 1) / 3}, {1, q * (q + 1) / 2}, {3, q * (q - 1) / 6}});
}

bool matches_target(const Distribution& dist) {
  const std::uint64_t q = dist.q();
  if (q % 3 != 0) return false;
  return dist == target_distribution(q);
}

bool same_multiplicity_distribution(const FieldCtx& ctx, const Poly& f, const Poly& g,
                                    unsigned workers) {
  auto a = multiplicity_profile(ctx, f, workers);
  auto b = multiplicity_profile(ctx, g, workers);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Poly monomial_poly(const FieldCtx& ctx, std::uint64_t d) {
  return Poly::monomial(ctx.one(), static_cast<std::size_t>(d));
}

}  // namespace idist
