#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "idist/cubic.hpp"
#include "idist/distribution.hpp"
#include "idist/error.hpp"
#include "idist/exponents.hpp"
#include "idist/field.hpp"
#include "idist/harness.hpp"
#include "idist/json_io.hpp"
#include "idist/maps.hpp"
#include "idist/poly.hpp"

namespace idist::cli {
namespace {

using nlohmann::json;

struct Config {
  std::uint32_t p = 3;
  int m = 0;
  std::string modulus;
  std::optional<std::uint64_t> exponent;
  std::string poly;
  std::string num;
  std::string den;
  std::vector<std::uint64_t> exclude;
  std::optional<std::uint64_t> a;
  std::optional<std::uint64_t> b;
  std::string family;
  bool all = false;
  int min_m = 3;
  int max_m = 0;
  bool json_out = false;
  bool table_out = false;
  bool timings = false;
  unsigned workers = 1;
};

unsigned default_workers() {
  if (const char* env = std::getenv("IDIST_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON for ") + what + ": " + e.what());
  }
}

FieldCtx make_field(const Config& cfg) {
  if (cfg.modulus.empty()) return FieldCtx::create(cfg.p, cfg.m);
  std::string text = cfg.modulus;
  if (text.front() != '[' && text.front() != '{') {
    std::ifstream file(text);
    if (!file) throw Error("cannot open modulus file " + text);
    std::stringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  json spec = parse_json_arg(text, "--modulus");
  if (spec.is_array()) {
    return FieldCtx::create(cfg.p, cfg.m, spec.get<std::vector<std::uint32_t>>());
  }
  if (cfg.m != 0 && spec.value("m", cfg.m) != cfg.m) {
    throw Error("--m disagrees with the degree in the field spec");
  }
  if (!spec.contains("m")) spec["m"] = cfg.m;
  if (!spec.contains("p")) spec["p"] = cfg.p;
  return io::field_from_json(spec);
}

Poly target_poly(const FieldCtx& ctx, const Config& cfg) {
  if (cfg.exponent && !cfg.poly.empty()) throw Error("pass either --exp or --poly, not both");
  if (cfg.exponent) {
    if (*cfg.exponent > 10 * ctx.q()) throw Error("--exp is unreasonably large for this field");
    return monomial_poly(ctx, *cfg.exponent);
  }
  if (!cfg.poly.empty()) return io::poly_from_json(ctx, parse_json_arg(cfg.poly, "--poly"));
  throw Error("one of --exp or --poly is required");
}

Element element_arg(const FieldCtx& ctx, const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw Error(std::string(flag) + " is required");
  return ctx.element(*v);
}

void print_counts(std::ostream& out, const Distribution& dist) {
  out << std::setw(8) << "i" << std::setw(14) << "count" << "\n";
  for (auto [i, n] : dist.counts()) out << std::setw(8) << i << std::setw(14) << n << "\n";
}

void print_report(std::ostream& out, const VerificationReport& rep) {
  out << rep.family << "  m = " << rep.m;
  if (rep.d) out << "  d = " << rep.d->str();
  if (rep.d_inv) out << "  d^-1 = " << rep.d_inv->str();
  out << "\n";
  if (rep.distribution) {
    out << "  v:";
    for (auto [i, n] : rep.distribution->counts()) out << "  v" << i << "=" << n;
    out << "\n";
  }
  for (const auto& c : rep.checks) {
    out << "  " << std::left << std::setw(32) << c.name << std::setw(9)
        << status_name(c.status) << std::right << std::fixed << std::setprecision(3)
        << c.seconds << "s";
    if (c.status == CheckStatus::fail) out << "  witness " << c.witness.dump();
    if (c.status == CheckStatus::skipped) out << "  " << c.detail.value("reason", "");
    out << "\n";
  }
  out << "  overall: " << status_name(rep.overall()) << "\n";
}

int cmd_field_info(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const Element minus_one = ctx.from_int(-1);
  if (cfg.json_out) {
    json j = io::field_to_json(ctx);
    j["version"] = io::kSchemaVersion;
    j["q"] = ctx.q();
    j["minus_one_is_square"] = ctx.is_square(minus_one);
    out << j.dump() << "\n";
  } else {
    out << ctx.describe() << "\n";
    out << "-1 is " << (ctx.is_square(minus_one) ? "a square" : "a non-square") << "\n";
  }
  return kExitPass;
}

int cmd_dist(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const Poly f = target_poly(ctx, cfg);
  const auto dist = intersection_distribution(ctx, f, cfg.workers);
  if (cfg.json_out) {
    json j = io::distribution_to_json(dist, f);
    j["matches_target"] = matches_target(dist);
    out << j.dump() << "\n";
  } else {
    out << "intersection distribution over F_" << ctx.q() << "\n";
    print_counts(out, dist);
    out << "matches the (q(q-1)/3, q(q+1)/2, 0, q(q-1)/6) pattern: "
        << (matches_target(dist) ? "yes" : "no") << "\n";
  }
  return kExitPass;
}

int cmd_mult_dist(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const Poly f = target_poly(ctx, cfg);
  const Element b = element_arg(ctx, cfg.b, "--b");
  const auto dist = multiplicity_distribution(ctx, f, b);
  if (cfg.json_out) {
    out << json{{"version", io::kSchemaVersion},
                {"q", ctx.q()},
                {"f", io::poly_to_json(f)},
                {"b", b.enc()},
                {"M", io::counts_to_json(dist)}}
               .dump()
        << "\n";
  } else {
    out << "multiplicity distribution at b = " << b.enc() << "\n";
    print_counts(out, dist);
  }
  return kExitPass;
}

int cmd_two_to_one(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  if (cfg.exponent) {
    const auto k = kly_criterion(ctx, *cfg.exponent);
    if (cfg.json_out) {
      out << json{{"version", io::kSchemaVersion},
                  {"q", ctx.q()},
                  {"d", k.d},
                  {"gcd_d_minus_1", k.gcd_d_minus_1},
                  {"g_d", io::two_to_one_to_json(k.g_two_to_one)},
                  {"holds", k.holds()}}
                 .dump()
          << "\n";
    } else {
      out << "d = " << k.d << "  gcd(d-1, q-1) = " << k.gcd_d_minus_1
          << "  g_d 2-to-1 on F_q\\{1}: " << (k.g_two_to_one.two_to_one ? "yes" : "no") << "\n";
      if (k.g_two_to_one.witness) {
        out << "witness fiber over " << k.g_two_to_one.witness->value.enc() << ":";
        for (auto e : k.g_two_to_one.witness->preimages) out << " " << e.enc();
        out << "\n";
      }
      out << "criterion: " << (k.holds() ? "holds" : "fails") << "\n";
    }
    return k.holds() ? kExitPass : kExitFail;
  }
  if (cfg.num.empty()) throw Error("two-to-one needs --exp or --num");
  const Poly num = io::poly_from_json(ctx, parse_json_arg(cfg.num, "--num"));
  std::vector<Element> domain;
  for (std::uint64_t v = 0; v < ctx.q(); ++v) {
    if (std::find(cfg.exclude.begin(), cfg.exclude.end(), v) == cfg.exclude.end()) {
      domain.emplace_back(v);
    }
  }
  const auto map = cfg.den.empty()
                       ? EvaluableMap::polynomial(ctx, num, std::move(domain))
                       : EvaluableMap::rational(
                             ctx, num, io::poly_from_json(ctx, parse_json_arg(cfg.den, "--den")),
                             std::move(domain));
  const auto r = is_two_to_one(map);
  if (cfg.json_out) {
    json j = io::two_to_one_to_json(r);
    j["version"] = io::kSchemaVersion;
    out << j.dump() << "\n";
  } else {
    out << "2-to-1: " << (r.two_to_one ? "yes" : "no") << "  image size " << r.image_size << "\n";
    if (r.witness) {
      out << "witness fiber over " << r.witness->value.enc() << ":";
      for (auto e : r.witness->preimages) out << " " << e.enc();
      out << "\n";
    }
  }
  return r.two_to_one ? kExitPass : kExitFail;
}

int cmd_cubic(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const Element a = element_arg(ctx, cfg.a, "--a");
  const Element b = element_arg(ctx, cfg.b, "--b");
  const auto cls = classify_cubic(ctx, a, b);
  RootSet roots;
  if (ctx.q() <= kEnumerationCap) roots = cubic_root_oracle(ctx, a, b);
  if (cfg.json_out) {
    out << io::cubic_to_json(cls, roots).dump() << "\n";
  } else {
    out << cubic_type_name(cls.type) << "\n";
  }
  return kExitPass;
}

int cmd_resultant(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ctx = make_field(cfg);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("resultant: invalid JSON on standard input: ") + e.what());
  }
  json result;
  if (doc.is_object() && doc.contains("F") && doc.contains("G")) {
    const auto f = io::bipoly_from_json(ctx, doc.at("F"));
    const auto g = io::bipoly_from_json(ctx, doc.at("G"));
    result = io::poly_to_json(resultant_in_y(ctx, f, g));
  } else {
    json u, v;
    if (doc.is_object() && doc.contains("u") && doc.contains("v")) {
      u = doc.at("u");
      v = doc.at("v");
    } else if (doc.is_array() && doc.size() == 2) {
      u = doc[0];
      v = doc[1];
    } else {
      throw Error("resultant: expected {\"u\": [...], \"v\": [...]} or {\"F\": [[...]], \"G\": [[...]]}");
    }
    result = resultant(ctx, io::poly_from_json(ctx, u), io::poly_from_json(ctx, v)).enc();
  }
  if (cfg.json_out) {
    out << json{{"version", io::kSchemaVersion}, {"resultant", result}}.dump() << "\n";
  } else {
    out << result.dump() << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<Family> families;
  if (cfg.family.empty()) {
    if (!cfg.all) throw Error("verify needs --case i|ii or --all");
    families = {Family::case_i, Family::case_ii};
  } else {
    auto f = parse_family(cfg.family);
    if (!f) throw Error("unknown case '" + cfg.family + "'; use i or ii");
    families = {*f};
  }
  std::vector<int> ms;
  if (cfg.all) {
    if (cfg.max_m < 1) throw Error("--all needs --max-m");
    for (int m = std::max(1, cfg.min_m); m <= cfg.max_m; ++m) {
      if (m % 2 == 1) ms.push_back(m);
    }
  } else {
    if (cfg.m < 1) throw Error("verify needs --m");
    if (cfg.m % 2 == 0) throw Error("verify requires odd m, got m = " + std::to_string(cfg.m));
    ms.push_back(cfg.m);
  }

  // Validate every field before doing any work so that config errors exit 2.
  std::vector<std::pair<FieldCtx, ExponentFamily>> jobs;
  for (int m : ms) {
    Config sub = cfg;
    sub.m = m;
    const auto ctx = make_field(sub);
    for (auto fam : families) jobs.emplace_back(ctx, ExponentFamily::make(fam, m));
  }

  HarnessOptions opts;
  opts.workers = cfg.workers;
  std::vector<VerificationReport> reports;
  bool all_pass = true;
  for (const auto& [ctx, fam] : jobs) {
    reports.push_back(verify_family(ctx, fam, opts));
    all_pass = all_pass && reports.back().overall() == CheckStatus::pass;
  }

  if (cfg.json_out) {
    if (reports.size() == 1) {
      out << io::report_to_json(reports.front(), cfg.timings).dump() << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(io::report_to_json(r, cfg.timings));
      out << json{{"version", io::kSchemaVersion},
                  {"reports", arr},
                  {"overall", all_pass ? "pass" : "fail"}}
                 .dump()
          << "\n";
    }
  } else {
    for (const auto& r : reports) print_report(out, r);
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_gcd_scan(const Config& cfg, std::ostream& out) {
  std::vector<Family> families = {Family::case_i, Family::case_ii};
  if (!cfg.family.empty()) {
    auto f = parse_family(cfg.family);
    if (!f) throw Error("unknown case '" + cfg.family + "'; use i or ii");
    families = {*f};
  }
  const int max_m = cfg.max_m > 0 ? cfg.max_m : 99;
  if (max_m > 2001) throw Error("--max-m above 2001 is not supported");
  json rows = json::array();
  bool all_pass = true;
  if (!cfg.json_out) {
    out << std::setw(8) << "case" << std::setw(6) << "m" << std::setw(14) << "gcd(d-1,q-1)"
        << std::setw(12) << "gcd(d,q-1)" << std::setw(8) << "status" << "  d\n";
  }
  for (auto fam : families) {
    for (int m = 1; m <= max_m; m += 2) {
      const auto rep = exponent_suite(ExponentFamily::make(fam, m));
      all_pass = all_pass && rep.pass();
      if (cfg.json_out) {
        rows.push_back(io::exponent_report_to_json(rep));
      } else {
        out << std::setw(8) << family_name(fam) << std::setw(6) << m << std::setw(14)
            << rep.gcd_d_minus_1.str() << std::setw(12) << rep.gcd_d.str() << std::setw(8)
            << (rep.pass() ? "pass" : "FAIL") << "  " << rep.d.str() << "\n";
      }
    }
  }
  if (cfg.json_out) {
    out << json{{"version", io::kSchemaVersion}, {"rows", rows},
                {"overall", all_pass ? "pass" : "fail"}}
               .dump()
        << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

void add_field_options(CLI::App* cmd, Config& cfg, bool require_m = true) {
  cmd->add_option("--p", cfg.p, "field characteristic")->capture_default_str();
  auto* m = cmd->add_option("--m", cfg.m, "extension degree");
  if (require_m) m->required();
  cmd->add_option("--modulus", cfg.modulus,
                  "modulus override: inline JSON coefficient list or field spec, or a file path");
}

void add_output_options(CLI::App* cmd, Config& cfg) {
  auto* j = cmd->add_flag("--json", cfg.json_out, "machine-readable JSON output");
  auto* t = cmd->add_flag("--table", cfg.table_out, "human-readable table output (default)");
  j->excludes(t);
}

void add_workers_option(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--workers", cfg.workers, "worker threads (default $IDIST_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  cfg.workers = default_workers();

  CLI::App app{"idist: intersection distributions and exponent-family verification over F_{3^m}",
               "idist"};
  app.require_subcommand(1);

  auto* field_info = app.add_subcommand("field-info", "describe a field and its modulus");
  add_field_options(field_info, cfg);
  add_output_options(field_info, cfg);

  auto* dist = app.add_subcommand("dist", "intersection distribution of x^d or a polynomial");
  add_field_options(dist, cfg);
  dist->add_option("--exp", cfg.exponent, "monomial exponent d");
  dist->add_option("--poly", cfg.poly, "polynomial as JSON array of encodings");
  add_output_options(dist, cfg);
  add_workers_option(dist, cfg);

  auto* mult = app.add_subcommand("mult-dist", "multiplicity distribution at slope b");
  add_field_options(mult, cfg);
  mult->add_option("--exp", cfg.exponent, "monomial exponent d");
  mult->add_option("--poly", cfg.poly, "polynomial as JSON array of encodings");
  mult->add_option("--b", cfg.b, "slope as element encoding")->required();
  add_output_options(mult, cfg);

  auto* two = app.add_subcommand("two-to-one", "monomial criterion or a 2-to-1 test of a map");
  add_field_options(two, cfg);
  two->add_option("--exp", cfg.exponent, "run the monomial criterion for x^d");
  two->add_option("--num", cfg.num, "numerator polynomial (JSON)");
  two->add_option("--den", cfg.den, "denominator polynomial (JSON)");
  two->add_option("--exclude", cfg.exclude, "domain points to remove (encodings)");
  add_output_options(two, cfg);

  auto* cubic = app.add_subcommand("cubic", "factorization type of x^3 + a x + b");
  add_field_options(cubic, cfg);
  cubic->add_option("--a", cfg.a, "linear coefficient (encoding)")->required();
  cubic->add_option("--b", cfg.b, "constant coefficient (encoding)")->required();
  add_output_options(cubic, cfg);

  auto* res = app.add_subcommand("resultant", "Sylvester resultant of JSON input on stdin");
  add_field_options(res, cfg);
  add_output_options(res, cfg);

  auto* verify = app.add_subcommand("verify", "run the verification harness");
  add_field_options(verify, cfg, false);
  verify->add_option("--case", cfg.family, "exponent family: i or ii");
  verify->add_flag("--all", cfg.all, "both families for every odd m in [--min-m, --max-m]");
  verify->add_option("--min-m", cfg.min_m, "smallest m for --all")->capture_default_str();
  verify->add_option("--max-m", cfg.max_m, "largest m for --all");
  verify->add_flag("--timings", cfg.timings, "include wall-clock seconds in JSON output");
  add_output_options(verify, cfg);
  add_workers_option(verify, cfg);

  auto* gcd = app.add_subcommand("gcd-scan", "exponent gcd suite for odd m up to --max-m");
  gcd->add_option("--case", cfg.family, "exponent family: i or ii (default both)");
  gcd->add_option("--max-m", cfg.max_m, "largest odd m (default 99)");
  add_output_options(gcd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (field_info->parsed()) return cmd_field_info(cfg, out);
    if (dist->parsed()) return cmd_dist(cfg, out);
    if (mult->parsed()) return cmd_mult_dist(cfg, out);
    if (two->parsed()) return cmd_two_to_one(cfg, out);
    if (cubic->parsed()) return cmd_cubic(cfg, out);
    if (res->parsed()) return cmd_resultant(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (gcd->parsed()) return cmd_gcd_scan(cfg, out);
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace idist::cli
