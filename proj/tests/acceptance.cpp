// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idist/cubic.hpp"
#include "idist/distribution.hpp"
#include "idist/exponents.hpp"
#include "idist/field.hpp"
#include "idist/harness.hpp"
#include "idist/maps.hpp"

namespace {

using namespace idist;
using Counts = std::map<std::uint64_t, std::uint64_t>;

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<std::string()> body;  // empty string on success, else the reason
};

bool exact(const Distribution& d, const Counts& expected) { return d.counts() == expected; }

std::string distributions_match(int m, const std::vector<std::uint64_t>& exponents,
                                const Counts& expected) {
  const auto ctx = FieldCtx::create(3, m);
  for (auto e : exponents) {
    const auto v = intersection_distribution(ctx, monomial_poly(ctx, e));
    if (!exact(v, expected)) return "x^" + std::to_string(e) + " differs";
  }
  return {};
}

std::uint64_t inverse_of(Family f, int m) {
  return to_u64(*ExponentFamily::make(f, m).d_inv);
}

std::string all_pass(const VerificationReport& r, const std::vector<std::string>& names) {
  for (const auto& c : r.checks) {
    for (const auto& n : names) {
      if (c.name == n && c.status != CheckStatus::pass) {
        return "m=" + std::to_string(r.m) + " " + c.name + " " + std::string(status_name(c.status));
      }
    }
  }
  for (const auto& n : names) {
    bool found = false;
    for (const auto& c : r.checks) found = found || c.name == n;
    if (!found) return "missing check " + n;
  }
  return {};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "distribution of x^11, x^19 over F_27", 1.0, [] {
                   if (inverse_of(Family::case_i, 3) != 19) return std::string("11^-1 != 19");
                   return distributions_match(3, {11, 19}, {{0, 234}, {1, 378}, {3, 117}});
                 }});

  out.push_back({2, "distribution of x^29, x^163 and inverses over F_243", 10.0, [] {
                   const auto i1 = inverse_of(Family::case_i, 5);
                   const auto i2 = inverse_of(Family::case_ii, 5);
                   if (i1 != 217) return std::string("29^-1 != 217");
                   if ((163 * i2) % 242 != 1) return std::string("bad inverse of 163");
                   return distributions_match(5, {29, 163, i1, i2},
                                              {{0, 19602}, {1, 29646}, {3, 9801}});
                 }});

  out.push_back({3, "distribution of both families over F_2187", 60.0, [] {
                   const std::uint64_t q = 2187;
                   const Counts expected{{0, 1593594}, {1, 2392578}, {3, 796797}};
                   if (1593594 + 2392578 + 796797 != q * q) return std::string("bad totals");
                   const auto d1 = to_u64(ExponentFamily::make(Family::case_i, 7).d);
                   const auto d2 = to_u64(ExponentFamily::make(Family::case_ii, 7).d);
                   return distributions_match(7, {d1, d2}, expected);
                 }});

  out.push_back({4, "monomial criterion iff target shape, 2 <= d <= 26 over F_27", std::nullopt, [] {
                   const auto ctx = FieldCtx::create(3, 3);
                   int disagreements = 0;
                   for (std::uint64_t d = 2; d <= 26; ++d) {
                     const bool kly = kly_criterion(ctx, d).holds();
                     const bool target =
                         matches_target(intersection_distribution(ctx, monomial_poly(ctx, d)));
                     disagreements += kly != target;
                   }
                   return disagreements == 0 ? std::string()
                                             : std::to_string(disagreements) + " disagreements";
                 }});

  out.push_back({5, "cubic classifier vs root oracle, q in {3, 27, 243}", 30.0, [] {
                   std::uint64_t pairs = 0;
                   for (int m : {1, 3, 5}) {
                     const auto ctx = FieldCtx::create(3, m);
                     for (auto a : ctx.elements()) {
                       for (auto b : ctx.elements()) {
                         ++pairs;
                         const auto roots = cubic_root_oracle(ctx, a, b);
                         if (classify_cubic(ctx, a, b).type !=
                             type_from_root_count(roots.count, a.is_zero())) {
                           return "disagreement at m=" + std::to_string(m) +
                                  " a=" + std::to_string(a.enc()) + " b=" + std::to_string(b.enc());
                         }
                       }
                     }
                   }
                   return pairs == 9 + 729 + 59049 ? std::string() : std::string("pair count");
                 }});

  out.push_back({6, "case (i) resultant identity and non-vanishing, m in {3, 5}", std::nullopt, [] {
                   for (int m : {3, 5}) {
                     const auto r = verify_resultant_identity(FieldCtx::create(3, m));
                     auto why = all_pass(r, {"resultant_identity", "nonvanishing_b_plus_2",
                                             "nonvanishing_a2b3_ne_1", "nonvanishing_ab2_ab_1"});
                     if (!why.empty()) return why;
                   }
                   return std::string();
                 }});

  out.push_back({7, "case (i) closed-form solution and zero fiber, m in {3, 5, 7}", std::nullopt, [] {
                   for (int m : {3, 5, 7}) {
                     const auto r = verify_closed_form(FieldCtx::create(3, m));
                     auto why = all_pass(r, {"closed_form_solves", "closed_form_nonzero",
                                             "closed_form_admissible", "zero_fiber_size_2",
                                             "special_case_a0", "special_case_a2"});
                     if (!why.empty()) return why;
                   }
                   return std::string();
                 }});

  out.push_back({8, "case (ii) numerator identity, unique root, (1,2) reduction", std::nullopt, [] {
                   for (int m : {3, 5}) {
                     const auto r = verify_case_ii_equations(FieldCtx::create(3, m));
                     auto why = all_pass(r, {"shift_numerator_identity", "cubic_cofactor",
                                             "cubic_unique_root", "reduction_verdict"});
                     if (!why.empty()) return why;
                   }
                   for (int m : {3, 5, 7}) {
                     const auto ctx = FieldCtx::create(3, m);
                     for (auto a : ctx.elements()) {
                       if (ctx.in_prime_field(a)) continue;
                       if (!reduce_case_ii(ctx, a).verdict()) {
                         return "M(x) not (1,2) at m=" + std::to_string(m) +
                                " a=" + std::to_string(a.enc());
                       }
                     }
                   }
                   return std::string();
                 }});

  out.push_back({9, "exponent suite, both families, odd m <= 99", 1.0, [] {
                   for (auto fam : {Family::case_i, Family::case_ii}) {
                     for (int m = 1; m <= 99; m += 2) {
                       const auto rep = exponent_suite(ExponentFamily::make(fam, m));
                       if (!rep.pass() || rep.gcd_d_minus_1 != 2 || rep.gcd_d != 1 || !rep.d_inv ||
                           (rep.d * *rep.d_inv) % rep.q_minus_1 != 1) {
                         return std::string(family_name(fam)) + " m=" + std::to_string(m);
                       }
                     }
                   }
                   return std::string();
                 }});

  out.push_back({10, "multiplicity multisets of x^11, x^19 and sum rules on 50 polys", std::nullopt,
                 [] {
                   const auto ctx = FieldCtx::create(3, 3);
                   if (!same_multiplicity_distribution(ctx, monomial_poly(ctx, 11),
                                                       monomial_poly(ctx, 19))) {
                     return std::string("multisets differ");
                   }
                   std::mt19937_64 rng(20240601);
                   std::uniform_int_distribution<int> deg(0, 6);
                   std::uniform_int_distribution<std::uint64_t> pick(0, ctx.q() - 1);
                   const std::uint64_t q = ctx.q();
                   for (int t = 0; t < 50; ++t) {
                     std::vector<Element> c;
                     const int n = deg(rng);
                     for (int i = 0; i <= n; ++i) c.emplace_back(pick(rng));
                     const Poly f{c};
                     const auto v = intersection_distribution(ctx, f);
                     if (v.total() != q * q || v.weighted_total() != q * q) return std::string("v sums");
                     for (const auto& M : multiplicity_profile(ctx, f)) {
                       if (M.total() != q || M.weighted_total() != q) return std::string("M sums");
                     }
                   }
                   return std::string();
                 }});

  out.push_back({11, "-1 is a non-square in F_{3^m} exactly for odd m <= 10", std::nullopt, [] {
                   for (int m = 1; m <= 10; ++m) {
                     const auto ctx = FieldCtx::create(3, m);
                     if (ctx.is_square(ctx.from_int(-1)) != (m % 2 == 0)) {
                       return "m=" + std::to_string(m);
                     }
                   }
                   return std::string();
                 }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_seconds && secs >= *c.limit_seconds) {
      why = "exceeded time limit";
    }
    const bool ok = why.empty();
    failures += !ok;
    char timing[64];
    if (c.limit_seconds) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, *c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    }
    std::printf("%s  criterion %2d  %s  (%s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                timing, ok ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
