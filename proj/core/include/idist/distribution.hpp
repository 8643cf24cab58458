#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "idist/field.hpp"
#include "idist/poly.hpp"

namespace idist {

/// Sparse map i -> count over a field of size q. Zero counts are never stored.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::uint64_t q) : q_(q) {}
  Distribution(std::uint64_t q, std::map<std::uint64_t, std::uint64_t> counts);

  [[nodiscard]] std::uint64_t q() const { return q_; }
  [[nodiscard]] const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  [[nodiscard]] std::uint64_t at(std::uint64_t i) const;

  void add(std::uint64_t i, std::uint64_t n);
  /// Entry-wise sum; both sides must share q.
  Distribution& operator+=(const Distribution& other);

  /// Sum of counts.
  [[nodiscard]] std::uint64_t total() const;
  /// Sum of i * counts[i].
  [[nodiscard]] std::uint64_t weighted_total() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
  friend auto operator<=>(const Distribution&, const Distribution&) = default;

 private:
  std::uint64_t q_ = 0;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

/// (M_i(f, b))_i via the value histogram of x -> f(x) - b x.
Distribution multiplicity_distribution(const FieldCtx& ctx, const Poly& f, Element b);

/// M_.(f, b) for every slope b, indexed by enc(b).
std::vector<Distribution> multiplicity_profile(const FieldCtx& ctx, const Poly& f,
                                               unsigned workers = 1);

/// (v_i(f))_i = sum over b of M_i(f, b). The result does not depend on workers.
Distribution intersection_distribution(const FieldCtx& ctx, const Poly& f, unsigned workers = 1);

/// {0: q(q-1)/3, 1: q(q+1)/2, 3: q(q-1)/6}, the distribution shared by x^3
/// and the two exponent families over F_{3^m}.
Distribution target_distribution(std::uint64_t q);

/// True iff dist is exactly target_distribution(dist.q()).
bool matches_target(const Distribution& dist);

/// Compares the multisets {M_.(f, b)} and {M_.(g, b)} over all b.
bool same_multiplicity_distribution(const FieldCtx& ctx, const Poly& f, const Poly& g,
                                    unsigned workers = 1);

/// x^d as a Poly.
Poly monomial_poly(const FieldCtx& ctx, std::uint64_t d);

}  // namespace idist
