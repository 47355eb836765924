#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "segrelab/cache.hpp"
#include "segrelab/depthlab.hpp"
#include "segrelab/ellfrob.hpp"
#include "segrelab/segre.hpp"
#include "segrelab/version.hpp"

namespace segrelab {

struct job_config {
  std::string command;
  std::string curve_file;
  std::string fixture;
  std::uint64_t characteristic = 0;  // 0 = rational coefficients
  bool char_given = false;
  std::uint64_t limit = 100;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::string budget_spec;  // "<pairs>" or "<seconds>s"
  std::string cache_dir;
  std::string format = "text";
  bool summary = false;

  budget make_budget() const {
    budget b = default_budget();
    if (budget_spec.empty()) return b;
    std::string s = budget_spec;
    if (!s.empty() && (s.back() == 's' || s.back() == 'S')) {
      b.max_seconds = std::stod(s.substr(0, s.size() - 1));
    } else {
      b.max_pairs = std::stoull(s);
    }
    return b;
  }
};

// Curve files are line-oriented `key: value`; blank lines and #-comments are
// skipped.  Keys: `variables` (three names), `cubic` (polynomial in them),
// optional `char` (default characteristic) and `name`.
struct curve_file {
  std::vector<std::string> variables;
  std::string cubic;
  std::string name;
  std::uint64_t characteristic = 0;
  bool char_given = false;
};

inline curve_file parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open curve file '" + path + "'");
  curve_file out;
  std::string line;
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw precondition_error("curve file line without ':': " + t);
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    if (key == "variables") {
      std::istringstream vs(val);
      std::string v;
      while (vs >> v) out.variables.push_back(v);
    } else if (key == "cubic") {
      out.cubic = val;
    } else if (key == "char") {
      out.characteristic = std::stoull(val);
      out.char_given = true;
    } else if (key == "name") {
      out.name = val;
    } else {
      throw precondition_error("unknown curve file key '" + key + "'");
    }
  }
  if (out.variables.size() != 3)
    throw precondition_error("curve file must list exactly 3 variables");
  if (out.cubic.empty()) throw precondition_error("curve file lacks a cubic");
  return out;
}

template <class F>
cubic_curve<F> curve_from_file(const curve_file& cf, const F& field) {
  ring_ptr<F> r = make_ring(field, cf.variables);
  polynomial<F> f = parse_poly(r, cf.cubic);
  return make_cubic(std::move(f), cf.name.empty() ? cf.cubic : cf.name);
}

struct cli_result {
  int exit_code = 0;
  report rep;
};

namespace detail {

inline std::uint64_t effective_char(const job_config& cfg, const curve_file& cf) {
  if (cfg.char_given) return cfg.characteristic;
  if (cf.char_given) return cf.characteristic;
  return 0;
}

inline curve_file require_curve(const job_config& cfg) {
  if (cfg.curve_file.empty())
    throw precondition_error("this command needs --curve FILE");
  return parse_curve_file(cfg.curve_file);
}

inline std::string require_fixture(const job_config& cfg) {
  if (cfg.fixture.empty())
    throw precondition_error("this command needs --fixture NAME");
  return cfg.fixture;
}

inline void add_timing(report& rep, double seconds) {
  rep.section("timings").set("seconds", std::to_string(seconds));
}

class stopwatch {
 public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline cli_result cmd_verify_theorem1(const job_config& cfg) {
  curve_file cf = detail::require_curve(cfg);
  std::uint64_t ch = detail::effective_char(cfg, cf);
  if (ch == 3) throw precondition_error("characteristic 3 excluded");
  budget bud = cfg.make_budget();
  cli_result out;
  if (ch == 0) {
    auto vr = verify_theorem1(curve_from_file(cf, rational_field{}), bud);
    out.rep = vr.to_report();
    out.exit_code = vr.all_verified() ? 0 : 1;
  } else {
    auto vr = verify_theorem1(curve_from_file(cf, prime_field(ch)), bud);
    out.rep = vr.to_report();
    out.exit_code = vr.all_verified() ? 0 : 1;
  }
  return out;
}

inline cli_result cmd_kernel(const job_config& cfg) {
  curve_file cf = detail::require_curve(cfg);
  std::uint64_t ch = detail::effective_char(cfg, cf);
  if (ch == 3) throw precondition_error("characteristic 3 excluded");
  budget bud = cfg.make_budget();
  detail::stopwatch watch;
  cli_result out;
  auto run = [&](auto field) {
    using F = decltype(field);
    cubic_curve<F> c = curve_from_file(cf, field);
    ideal<F> kernel = kernel_by_elimination(c, bud);
    segre_presentation<F> pres = seven_generators(c);
    ideal<F> seven(pres.zring, pres.seven);
    bool match = kernel.equals(seven, bud);
    out.rep.set("curve", c.description);
    out.rep.set("characteristic", field.characteristic());
    out.rep.set("matches_seven_generators", match);
    auto& gens = out.rep.section("kernel_generators");
    auto basis = kernel.groebner(bud);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      char key[8];
      std::snprintf(key, sizeof key, "g%02zu", i + 1);
      gens.set(key, format_poly(to_segre_alias(basis[i])));
    }
    out.rep.set("generator_count", basis.size());
    out.exit_code = match ? 0 : 1;
  };
  if (ch == 0)
    run(rational_field{});
  else
    run(prime_field(ch));
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result cmd_hasse_sweep(const job_config& cfg) {
  curve_file cf = detail::require_curve(cfg);
  if (detail::effective_char(cfg, cf) != 0)
    throw precondition_error("hasse-sweep runs over the rational curve; drop --char");
  cubic_curve<rational_field> c = curve_from_file(cf, rational_field{});
  detail::stopwatch watch;
  classification_summary sum;
  auto rows = classify_primes(c, cfg.limit, &sum);
  cli_result out;
  out.rep.set("curve", c.description);
  out.rep.set("limit", cfg.limit);
  out.rep.set("rows", rows.size());
  auto& primes = out.rep.section("primes");
  for (const auto& r : rows) {
    char key[16];
    std::snprintf(key, sizeof key, "p%06llu", static_cast<unsigned long long>(r.p));
    auto& row = primes.section(key);
    row.set("status", to_string(r.status));
    if (r.status != reduction_status::bad_reduction) {
      row.set("hasse_coefficient", r.hasse_coefficient);
      row.set("predicted_cd",
              (r.status == reduction_status::supersingular ? 2 : 3) * cfg.n + 1);
    }
  }
  if (cfg.summary) {
    auto& s = out.rep.section("summary");
    s.set("good_primes", sum.good);
    s.set("bad_primes", sum.bad);
    s.set("supersingular", sum.supersingular);
    s.set("ordinary", sum.ordinary);
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.6f", sum.supersingular_fraction);
    s.set("supersingular_fraction", frac);
  }
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result cmd_cd_table(const job_config& cfg) {
  curve_file cf = detail::require_curve(cfg);
  if (detail::effective_char(cfg, cf) != 0)
    throw precondition_error("cd-table runs over the rational curve; drop --char");
  if (cfg.n < 1) throw precondition_error("--n must be at least 1");
  cubic_curve<rational_field> c = curve_from_file(cf, rational_field{});
  detail::stopwatch watch;
  auto rows = classify_primes(c, cfg.limit);
  cli_result out;
  out.rep.set("curve", c.description);
  out.rep.set("limit", cfg.limit);
  out.rep.set("n", cfg.n);
  out.rep.set("note", "cd values predicted from the ordinary/supersingular "
                      "dichotomy (2n+1 vs 3n+1), not computed");
  auto& primes = out.rep.section("primes");
  for (const auto& r : rows) {
    char key[16];
    std::snprintf(key, sizeof key, "p%06llu", static_cast<unsigned long long>(r.p));
    auto& row = primes.section(key);
    if (r.status == reduction_status::bad_reduction) {
      row.set("status", "bad_reduction");
      continue;
    }
    row.set("status", to_string(r.status));
    row.set("predicted_cd",
            (r.status == reduction_status::supersingular ? 2 : 3) * cfg.n + 1);
  }
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result cmd_depth(const job_config& cfg) {
  std::string name = detail::require_fixture(cfg);
  budget bud = cfg.make_budget();
  detail::stopwatch watch;
  cli_result out;
  depth_report dr;
  if (cfg.characteristic == 0)
    dr = depth_graded(example_ideals(name, rational_field{}), cfg.seed, bud);
  else
    dr = depth_graded(example_ideals(name, prime_field(cfg.characteristic)),
                      cfg.seed, bud);
  out.rep = dr.to_report();
  out.rep.set("fixture", name);
  out.rep.set("characteristic", cfg.characteristic);
  out.rep.set("seed", cfg.seed);
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result cmd_fedder(const job_config& cfg) {
  if (cfg.characteristic == 0)
    throw precondition_error("fedder needs --char P with P prime");
  prime_field k(cfg.characteristic);
  budget bud = cfg.make_budget();
  detail::stopwatch watch;
  cli_result out;
  bool fpure = false;
  if (!cfg.fixture.empty()) {
    ideal<prime_field> I = example_ideals(cfg.fixture, k);
    fpure = fedder_fpure(I, bud);
    out.rep.set("ideal", cfg.fixture);
    out.rep.set("method", "colon of bracket powers");
  } else {
    curve_file cf = detail::require_curve(cfg);
    cubic_curve<prime_field> c = curve_from_file(cf, k);
    ideal<prime_field> I(c.ring, {c.f});
    fpure = fedder_fpure(I, bud);
    out.rep.set("ideal", "(" + c.description + ")");
    out.rep.set("method", "principal shortcut: f^(p-1) against m^[p]");
  }
  out.rep.set("characteristic", cfg.characteristic);
  out.rep.set("f_pure", fpure);
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result cmd_modp_check(const job_config& cfg) {
  std::string name = detail::require_fixture(cfg);
  if (cfg.char_given && cfg.characteristic != 0)
    throw precondition_error("modp-check starts from the rational fixture; drop --char");
  budget bud = cfg.make_budget();
  detail::stopwatch watch;
  rational_field q;
  ideal<rational_field> I = example_ideals(name, q);
  depth_report dr = depth_graded(I, cfg.seed, bud);
  if (dr.regular_sequence.empty())
    throw precondition_error("no regular sequence found over Q to carry mod p");
  std::vector<polynomial<rational_field>> forms;
  for (const auto& s : dr.regular_sequence) forms.push_back(parse_poly(I.ring(), s));
  std::vector<std::uint64_t> primes =
      cfg.limit < 5 ? std::vector<std::uint64_t>{} : primes_in_range(5, cfg.limit);
  modp_report mr = modp_regular_sequence_check(I, forms, primes, bud);
  cli_result out;
  out.rep = mr.to_report();
  out.rep.set("fixture", name);
  out.rep.set("seed", cfg.seed);
  out.rep.set("sequence_length", forms.size());
  auto& seq = out.rep.section("regular_sequence");
  for (std::size_t i = 0; i < dr.regular_sequence.size(); ++i)
    seq.set("l" + std::to_string(i + 1), dr.regular_sequence[i]);
  detail::add_timing(out.rep, watch.seconds());
  return out;
}

inline cli_result run_command(const job_config& cfg) {
  if (!cfg.cache_dir.empty()) gb_cache::instance().set_directory(cfg.cache_dir);
  if (cfg.command == "verify-theorem1") return cmd_verify_theorem1(cfg);
  if (cfg.command == "kernel") return cmd_kernel(cfg);
  if (cfg.command == "hasse-sweep") return cmd_hasse_sweep(cfg);
  if (cfg.command == "cd-table") return cmd_cd_table(cfg);
  if (cfg.command == "depth") return cmd_depth(cfg);
  if (cfg.command == "fedder") return cmd_fedder(cfg);
  if (cfg.command == "modp-check") return cmd_modp_check(cfg);
  throw precondition_error("unknown command '" + cfg.command + "'");
}

// Text rendering: same content as the structured tree, fronted by a title.
inline std::string render_report(const job_config& cfg, const report& rep) {
  if (cfg.format == "structured") return rep.to_structured();
  std::string out = "segrelab " + cfg.command + "\n";
  std::string body = rep.to_structured();
  out += body;
  return out;
}

inline int run_cli(const job_config& cfg, std::ostream& out, std::ostream& err) {
  try {
    cli_result res = run_command(cfg);
    out << render_report(cfg, res.rep);
    return res.exit_code;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const budget_exhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return 3;
  } catch (const claim_failure& e) {
    err << "CLAIM FAILED: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace segrelab
