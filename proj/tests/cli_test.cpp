// The command-line surface: config and curve-file parsing, exit codes, the
// determinism contract on structured reports, and the on-disk basis cache.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "segrelab/cli.hpp"
#include "segrelab/fields.hpp"

namespace segrelab {
namespace {

namespace fs = std::filesystem;

class temp_dir {
 public:
  explicit temp_dir(const std::string& tag) {
    path_ = fs::temp_directory_path() /
            ("segrelab_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~temp_dir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string write_file(const fs::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
  return p.string();
}

std::string fermat_curve_text() {
  return "# test curve\nname: fermat\nvariables: x0 x1 x2\n"
         "cubic: x0^3 + x1^3 + x2^3\n";
}

struct cli_run {
  int code = 0;
  std::string out;
  std::string err;
};

cli_run run(const job_config& cfg) {
  std::ostringstream out, err;
  cli_run r;
  r.code = run_cli(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(JobConfig, BudgetSpecParsing) {
  job_config cfg;
  EXPECT_EQ(cfg.make_budget().max_pairs, default_budget().max_pairs);
  cfg.budget_spec = "200000";
  EXPECT_EQ(cfg.make_budget().max_pairs, 200000u);
  cfg.budget_spec = "60s";
  EXPECT_DOUBLE_EQ(cfg.make_budget().max_seconds, 60.0);
  EXPECT_EQ(cfg.make_budget().max_pairs, default_budget().max_pairs);
  cfg.budget_spec = "2.5s";
  EXPECT_DOUBLE_EQ(cfg.make_budget().max_seconds, 2.5);
}

TEST(CurveFile, ParsesKeysAndComments) {
  temp_dir dir("curvefile");
  auto path = write_file(dir.path() / "c.curve",
                         "# a comment\n\nname: fermat\nvariables: x0 x1 x2\n"
                         "cubic: x0^3 + x1^3 + x2^3\nchar: 7\n");
  curve_file cf = parse_curve_file(path);
  EXPECT_EQ(cf.name, "fermat");
  EXPECT_EQ(cf.variables, (std::vector<std::string>{"x0", "x1", "x2"}));
  EXPECT_EQ(cf.cubic, "x0^3 + x1^3 + x2^3");
  EXPECT_TRUE(cf.char_given);
  EXPECT_EQ(cf.characteristic, 7u);
  auto c = curve_from_file(cf, prime_field(7));
  EXPECT_EQ(c.description, "fermat");
  EXPECT_TRUE(is_smooth_cubic(c));
}

TEST(CurveFile, Rejections) {
  temp_dir dir("curvebad");
  EXPECT_THROW(parse_curve_file((dir.path() / "missing.curve").string()),
               precondition_error);
  auto no_cubic = write_file(dir.path() / "a.curve", "variables: x y z\n");
  EXPECT_THROW(parse_curve_file(no_cubic), precondition_error);
  auto two_vars =
      write_file(dir.path() / "b.curve", "variables: x y\ncubic: x^3\n");
  EXPECT_THROW(parse_curve_file(two_vars), precondition_error);
  auto bad_key = write_file(dir.path() / "c.curve",
                            "variables: x y z\ncubic: x^3\nfield: Q\n");
  EXPECT_THROW(parse_curve_file(bad_key), precondition_error);
  auto no_colon =
      write_file(dir.path() / "d.curve", "variables x y z\ncubic: x^3\n");
  EXPECT_THROW(parse_curve_file(no_colon), precondition_error);
}

class cli_with_curve : public ::testing::Test {
 protected:
  cli_with_curve() : dir_("cli") {
    curve_path_ = write_file(dir_.path() / "fermat.curve", fermat_curve_text());
  }
  job_config base(const std::string& command) {
    job_config cfg;
    cfg.command = command;
    cfg.curve_file = curve_path_;
    return cfg;
  }
  temp_dir dir_;
  std::string curve_path_;
};

TEST_F(cli_with_curve, VerifyTheorem1OverF7) {
  job_config cfg = base("verify-theorem1");
  cfg.characteristic = 7;
  cfg.char_given = true;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("kernel_matches_seven: true"), std::string::npos);
  EXPECT_NE(r.out.find("ara_upper_computed: 4"), std::string::npos);
  EXPECT_NE(r.out.find("dim: 3"), std::string::npos);
}

TEST_F(cli_with_curve, CharacteristicThreeExitsTwo) {
  job_config cfg = base("verify-theorem1");
  cfg.characteristic = 3;
  cfg.char_given = true;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("characteristic 3"), std::string::npos);
}

TEST_F(cli_with_curve, FlagOverridesFileCharacteristic) {
  auto path = write_file(dir_.path() / "char3.curve",
                         "variables: x0 x1 x2\ncubic: x0^3 + x1^3 + x2^3\n"
                         "char: 3\n");
  job_config cfg = base("verify-theorem1");
  cfg.curve_file = path;
  auto no_flag = run(cfg);
  EXPECT_EQ(no_flag.code, 2);  // file's char 3 applies
  cfg.characteristic = 7;
  cfg.char_given = true;
  EXPECT_EQ(run(cfg).code, 0);  // flag wins
}

TEST_F(cli_with_curve, SingularCurveExitsTwo) {
  auto path = write_file(dir_.path() / "sing.curve",
                         "variables: x0 x1 x2\ncubic: x0^3\n");
  job_config cfg = base("verify-theorem1");
  cfg.curve_file = path;
  cfg.characteristic = 7;
  cfg.char_given = true;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("precondition"), std::string::npos);
}

TEST_F(cli_with_curve, UnknownCommandExitsTwo) {
  job_config cfg = base("frobnicate");
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown command"), std::string::npos);
}

TEST_F(cli_with_curve, MissingCurveExitsTwo) {
  job_config cfg;
  cfg.command = "kernel";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--curve"), std::string::npos);
}

TEST_F(cli_with_curve, ParseErrorInCubicExitsTwo) {
  auto path = write_file(dir_.path() / "typo.curve",
                         "variables: x0 x1 x2\ncubic: x0^3 + q^3 + x2^3\n");
  job_config cfg = base("kernel");
  cfg.curve_file = path;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST_F(cli_with_curve, TinyPairBudgetExitsThree) {
  job_config cfg = base("verify-theorem1");
  cfg.characteristic = 7;
  cfg.char_given = true;
  cfg.budget_spec = "1";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget exhausted"), std::string::npos);
}

TEST_F(cli_with_curve, KernelListsSevenGenerators) {
  job_config cfg = base("kernel");
  cfg.characteristic = 7;
  cfg.char_given = true;
  cfg.format = "structured";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("matches_seven_generators: true"), std::string::npos);
  EXPECT_NE(r.out.find("generator_count: 7"), std::string::npos);
  EXPECT_NE(r.out.find("g01:"), std::string::npos);
  EXPECT_NE(r.out.find("g07:"), std::string::npos);
}

TEST_F(cli_with_curve, HasseSweepRowsAndSummary) {
  job_config cfg = base("hasse-sweep");
  cfg.limit = 30;
  cfg.summary = true;
  cfg.format = "structured";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("p000005:"), std::string::npos);
  EXPECT_NE(r.out.find("status: supersingular"), std::string::npos);
  EXPECT_NE(r.out.find("p000007:"), std::string::npos);
  EXPECT_NE(r.out.find("hasse_coefficient: 6"), std::string::npos);
  // primes 5..29: supersingular at 5,11,17,23,29 of the 8 good ones
  EXPECT_NE(r.out.find("supersingular_fraction: 0.625000"), std::string::npos);
  // p=5 and 7: predicted cd at n=1 is 3 and 4
  EXPECT_NE(r.out.find("predicted_cd: 3"), std::string::npos);
  EXPECT_NE(r.out.find("predicted_cd: 4"), std::string::npos);
}

TEST_F(cli_with_curve, HasseSweepBelowFirstPrimeIsEmpty) {
  job_config cfg = base("hasse-sweep");
  cfg.limit = 4;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rows: 0"), std::string::npos);
}

TEST_F(cli_with_curve, HasseSweepRefusesChar) {
  job_config cfg = base("hasse-sweep");
  cfg.characteristic = 7;
  cfg.char_given = true;
  EXPECT_EQ(run(cfg).code, 2);
}

TEST_F(cli_with_curve, CdTableUsesN) {
  job_config cfg = base("cd-table");
  cfg.limit = 13;
  cfg.n = 2;
  cfg.format = "structured";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  // supersingular 5, 11 -> 2n+1 = 5; ordinary 7, 13 -> 3n+1 = 7
  EXPECT_NE(r.out.find("predicted_cd: 5"), std::string::npos);
  EXPECT_NE(r.out.find("predicted_cd: 7"), std::string::npos);
  EXPECT_NE(r.out.find("not computed"), std::string::npos);
}

TEST_F(cli_with_curve, StructuredOutputIsDeterministic) {
  job_config cfg = base("hasse-sweep");
  cfg.limit = 50;
  cfg.summary = true;
  auto a = run_command(cfg);
  auto b = run_command(cfg);
  EXPECT_EQ(a.rep.deterministic_view(), b.rep.deterministic_view());
  // timings stay quarantined in their own section, last
  auto txt = a.rep.to_structured();
  auto pos = txt.find("timings:");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_EQ(txt.find(':', txt.find('\n', pos) + 1),
            txt.find("seconds:", pos) + 7);
  EXPECT_EQ(a.rep.deterministic_view().find("timings"), std::string::npos);
}

TEST_F(cli_with_curve, TextFormatFrontsTheCommandName) {
  job_config cfg = base("hasse-sweep");
  cfg.limit = 10;
  auto text = run(cfg);
  cfg.format = "structured";
  auto structured = run(cfg);
  EXPECT_EQ(text.out.substr(0, 21), "segrelab hasse-sweep\n");
  // same body behind the title line, modulo timing values
  auto strip_timing = [](std::string s) {
    auto pos = s.find("timings:");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  EXPECT_EQ(strip_timing(text.out.substr(21)), strip_timing(structured.out));
}

TEST(CliDepth, FixtureOverF5) {
  job_config cfg;
  cfg.command = "depth";
  cfg.fixture = "hartshorne";
  cfg.characteristic = 5;
  cfg.char_given = true;
  cfg.format = "structured";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dim: 2"), std::string::npos);
  EXPECT_NE(r.out.find("depth: 1"), std::string::npos);
  EXPECT_NE(r.out.find("is_cohen_macaulay: false"), std::string::npos);
  EXPECT_NE(r.out.find("fixture: hartshorne"), std::string::npos);
}

TEST(CliDepth, MissingFixtureExitsTwo) {
  job_config cfg;
  cfg.command = "depth";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--fixture"), std::string::npos);
}

TEST(CliDepth, NonPrimeCharExitsTwo) {
  job_config cfg;
  cfg.command = "depth";
  cfg.fixture = "hartshorne";
  cfg.characteristic = 6;
  cfg.char_given = true;
  EXPECT_EQ(run(cfg).code, 2);
}

TEST(CliFedder, PrincipalCurveByCharacteristic) {
  temp_dir dir("fedder");
  auto path = write_file(dir.path() / "fermat.curve", fermat_curve_text());
  job_config cfg;
  cfg.command = "fedder";
  cfg.curve_file = path;
  cfg.characteristic = 7;
  cfg.char_given = true;
  auto r7 = run(cfg);
  EXPECT_EQ(r7.code, 0) << r7.err;
  EXPECT_NE(r7.out.find("f_pure: true"), std::string::npos);
  EXPECT_NE(r7.out.find("principal shortcut"), std::string::npos);
  cfg.characteristic = 5;
  auto r5 = run(cfg);
  EXPECT_EQ(r5.code, 0) << r5.err;
  EXPECT_NE(r5.out.find("f_pure: false"), std::string::npos);
}

TEST(CliFedder, FixturePathUsesColon) {
  job_config cfg;
  cfg.command = "fedder";
  cfg.fixture = "hartshorne";
  cfg.characteristic = 5;
  cfg.char_given = true;
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("colon of bracket powers"), std::string::npos);
}

TEST(CliFedder, RequiresCharacteristic) {
  job_config cfg;
  cfg.command = "fedder";
  cfg.fixture = "hartshorne";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--char"), std::string::npos);
}

TEST(CliModp, HartshorneSequencePersists) {
  job_config cfg;
  cfg.command = "modp-check";
  cfg.fixture = "hartshorne";
  cfg.limit = 13;
  cfg.format = "structured";
  auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("failing_primes: none"), std::string::npos);
  EXPECT_NE(r.out.find("sequence_length: 1"), std::string::npos);
  EXPECT_NE(r.out.find("l1:"), std::string::npos);
}

TEST(CliModp, RefusesExplicitChar) {
  job_config cfg;
  cfg.command = "modp-check";
  cfg.fixture = "hartshorne";
  cfg.characteristic = 5;
  cfg.char_given = true;
  EXPECT_EQ(run(cfg).code, 2);
}

// RAII guard: cache directory is process-global state.
class cache_guard {
 public:
  explicit cache_guard(const std::string& dir) {
    gb_cache::instance().set_directory(dir);
  }
  ~cache_guard() {
    gb_cache::instance().set_directory("");
    gb_cache::instance().set_version_tag(engine_version());
  }
};

TEST(Cache, RoundTripAndCorruptionRecovery) {
  temp_dir dir("cache");
  cache_guard guard(dir.path().string());
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  std::vector<polynomial<rational_field>> gens{parse_poly(r, "x^2 - y"),
                                               parse_poly(r, "x*y - 1")};
  ideal<rational_field> I(r, gens);
  auto basis1 = I.groebner();
  std::string key = gb_cache::instance().key_for(r, gens);
  fs::path entry = dir.path() / (key + ".gb");
  ASSERT_TRUE(fs::exists(entry));

  // a fresh ideal object reloads the stored basis
  ideal<rational_field> J(r, gens);
  EXPECT_EQ(J.groebner(), basis1);

  // corrupt entry: ignored, recomputed, rewritten
  write_file(entry, "segrelab-gb 1\nfield Q\norder grevlex\nx + q_bogus\n");
  ideal<rational_field> K(r, gens);
  EXPECT_EQ(K.groebner(), basis1);
  std::ifstream in(entry);
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  EXPECT_EQ(all.find("bogus"), std::string::npos);
}

TEST(Cache, KeyIsPresentationInvariant) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  auto f = parse_poly(r, "x^2 - y");
  auto g = parse_poly(r, "x*y - 1");
  auto& cache = gb_cache::instance();
  std::string k1 = cache.key_for(r, {f, g});
  EXPECT_EQ(cache.key_for(r, {g, f}), k1);            // order of generators
  EXPECT_EQ(cache.key_for(r, {f.scale(3), g}), k1);   // scaling
  EXPECT_EQ(cache.key_for(r, {f, g, g}), k1);         // duplicates
  EXPECT_NE(cache.key_for(r, {f}), k1);
  auto r5 = make_ring(prime_field(5), {"x", "y"});
  std::string k5 = cache.key_for(
      r5, {parse_poly(r5, "x^2 - y"), parse_poly(r5, "x*y - 1")});
  EXPECT_NE(k5, k1);  // field is part of the key
  auto rlex = make_ring(q, {"x", "y"}, monomial_order::lex());
  std::string klex = cache.key_for(
      rlex, {parse_poly(rlex, "x^2 - y"), parse_poly(rlex, "x*y - 1")});
  EXPECT_NE(klex, k1);  // order is part of the key
}

TEST(Cache, VersionBumpMisses) {
  temp_dir dir("cachever");
  cache_guard guard(dir.path().string());
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  std::vector<polynomial<rational_field>> gens{parse_poly(r, "x^3 - y"),
                                               parse_poly(r, "y^2 - x")};
  auto& cache = gb_cache::instance();
  std::string k1 = cache.key_for(r, gens);
  ideal<rational_field>(r, gens).groebner();
  ASSERT_TRUE(fs::exists(dir.path() / (k1 + ".gb")));

  cache.set_version_tag("segrelab/99.0.0-test");
  std::string k2 = cache.key_for(r, gens);
  EXPECT_NE(k2, k1);
  EXPECT_FALSE(fs::exists(dir.path() / (k2 + ".gb")));
  ideal<rational_field>(r, gens).groebner();  // recomputes under the new key
  EXPECT_TRUE(fs::exists(dir.path() / (k2 + ".gb")));
}

TEST(Cache, DisabledWithoutDirectory) {
  ASSERT_FALSE(gb_cache::instance().enabled());
  rational_field q;
  auto r = make_ring(q, {"x"});
  EXPECT_FALSE(
      gb_cache::instance().load(r, std::string(64, 'a')).has_value());
}

TEST(Report, StructuredIsSortedAndTimingsLast) {
  report rep;
  rep.set("zeta", "1");
  rep.set("alpha", "2");
  rep.section("timings").set("seconds", "0.5");
  rep.section("middle").set("k", true);
  auto txt = rep.to_structured();
  EXPECT_LT(txt.find("alpha: 2"), txt.find("zeta: 1"));
  EXPECT_LT(txt.find("middle:"), txt.find("timings:"));
  EXPECT_GT(txt.find("timings:"), txt.find("zeta: 1"));
  EXPECT_NE(txt.find("k: true"), std::string::npos);
  auto det = rep.deterministic_view();
  EXPECT_EQ(det.find("timings"), std::string::npos);
  EXPECT_NE(det.find("alpha: 2"), std::string::npos);
}

}  // namespace
}  // namespace segrelab
