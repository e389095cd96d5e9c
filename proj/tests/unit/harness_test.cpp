#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "monstrous/gf2/perm_group.hpp"
#include "monstrous/harness/checks.hpp"
#include "monstrous/harness/orders.hpp"
#include "monstrous/harness/report.hpp"

namespace monstrous::harness {
namespace {

// Plain schoolbook product for the oracle side.
BigInt naive_order_gl(unsigned n, std::uint64_t q) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= pow_big(q, n) - pow_big(q, i);
  return r;
}

TEST(Orders, Primality) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(29));
  EXPECT_FALSE(is_prime(39));
  EXPECT_TRUE(is_prime(71));
}

TEST(Orders, FactorizeRoundTrip) {
  for (std::uint64_t n : {1ULL, 2ULL, 60ULL, 9999360ULL, 23499295948800ULL, 4157776806543360000ULL}) {
    const OrderExpression e = OrderExpression::from_factors(factorize(BigInt(n)));
    EXPECT_TRUE(e.consistent());
    EXPECT_TRUE(e.factors_prime());
    EXPECT_EQ(e.decimal, BigInt(n));
  }
  EXPECT_THROW(factorize(0), std::domain_error);
}

TEST(Orders, PslAgainstGeneralLinear) {
  // |SL_n(q)| = |GL_n(q)| / (q - 1) and |L_n(q)| = |SL_n(q)| / gcd(n, q - 1).
  EXPECT_EQ(order_psl(2, 5), naive_order_gl(2, 5) / 4 / 2);
  EXPECT_EQ(order_psl(3, 2), naive_order_gl(3, 2));
  EXPECT_EQ(order_psl(5, 2), naive_order_gl(5, 2));
  EXPECT_EQ(order_psl(5, 2), 9999360);
  EXPECT_EQ(order_psl(2, 7), 168);
  EXPECT_EQ(order_psl(2, 5), 60);
}

TEST(Orders, OrthogonalFormulaAgainstStabilizerChain) {
  // Reflections generate O^+(2m, 2) except for m = 2, where they generate
  // a subgroup of index 2.
  for (int m = 1; m <= 5; ++m) {
    const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(m);
    const BigInt expect = order_orthogonal_plus_even(m, 2) / (m == 2 ? 2 : 1);
    EXPECT_EQ(gf2::group_order(gf2::transvection_generators(q)), expect) << m;
  }
  EXPECT_EQ(order_orthogonal_plus_even(2, 2), 72);
  EXPECT_THROW(order_omega_plus_even(2, 3), std::invalid_argument);
}

TEST(Orders, NamedLiteralsMatchFormulas) {
  std::map<std::string, BigInt> by_name;
  for (const NamedOrder& n : named_orders()) {
    EXPECT_FALSE(n.source.empty());
    by_name[n.name] = n.order;
  }
  EXPECT_EQ(by_name.at("L_5(2)"), order_psl(5, 2));
  EXPECT_EQ(by_name.at("L_2(5)"), order_psl(2, 5));
  EXPECT_EQ(by_name.at("Omega^+(10,2)"), order_omega_plus_even(5, 2));
  EXPECT_EQ(by_name.at("Sym_3"), 6);
  EXPECT_EQ(factorize(by_name.at("Co_1")), (Factorization{{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}));
}

TEST(Orders, ShapeEvaluation) {
  EXPECT_EQ(evaluate_shape("Sym_3").decimal, 6);
  EXPECT_EQ(evaluate_shape("2^{1+24}").decimal, BigInt(1) << 25);
  EXPECT_EQ(evaluate_shape("2^3").decimal, 8);
  EXPECT_EQ(evaluate_shape("2^{10}:L_5(2)").decimal, BigInt(1024) * 9999360);
  EXPECT_EQ(evaluate_shape("2^{15}(2^{20}:(L_5(2)\xC3\x97Sym_3))").decimal, BigInt("2061452360684666880"));
  EXPECT_EQ(evaluate_shape("2^{15} (2^{20} : (L_5(2) x Sym_3))"), evaluate_shape("2^{15}(2^{20}:(L_5(2)\xC3\x97Sym_3))"));
  EXPECT_EQ(evaluate_shape("2\xC2\xB7" "2^{24}Co_1"), evaluate_shape("2^{1+24}Co_1"));
  EXPECT_EQ(evaluate_shape("2.2^{24}.Co_1"), evaluate_shape("2^{25} Co_1"));
  EXPECT_EQ(evaluate_shape("").decimal, 1);
  for (const char* bad : {"2^{3", "(2", "2)", "Foo", "0", "2^", "L_5(3)"})
    EXPECT_THROW(evaluate_shape(bad), std::invalid_argument) << bad;
}

TEST(Orders, ShapeFactorsAlwaysConsistent) {
  for (const char* s : {"2^{10}(2^{16} Omega^+(10,2))", "2^{24}Co_1", "2^{5}(2^{10}(2^{20}:(L_5(2)xSym_3)))", "6 x 10"}) {
    const OrderExpression e = evaluate_shape(s);
    EXPECT_TRUE(e.consistent()) << s;
    EXPECT_TRUE(e.factors_prime()) << s;
    EXPECT_EQ(OrderExpression::from_factors(factorize(e.decimal)), e) << s;
  }
}

TEST(Orders, Monster) {
  const OrderExpression m = OrderExpression::from_factors(monster_factors());
  EXPECT_EQ(m.decimal.str(), "808017424794512875886459904961710757005754368000000000");
  EXPECT_EQ(m.decimal.str().size(), 54u);
  EXPECT_TRUE(m.factors_prime());
  // The largest prime divisors of the Monster order.
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};
  std::vector<std::uint64_t> got;
  for (const auto& [p, e] : m.factors) got.push_back(p);
  EXPECT_EQ(got, primes);

  const OrderExpression v = OrderExpression::from_factors(monster_factors(true));
  EXPECT_FALSE(v.factors_prime());
  EXPECT_TRUE(v.consistent());
  EXPECT_EQ(v.decimal * 29, m.decimal * 39);
}

TEST(Registry, GlobMatching) {
  EXPECT_TRUE(glob_match("*", "fusion.trace_z"));
  EXPECT_TRUE(glob_match("fusion.*", "fusion.trace_z"));
  EXPECT_FALSE(glob_match("fusion.*", "lattice.e8_roots"));
  EXPECT_TRUE(glob_match("lattice.leech_norm?", "lattice.leech_norm4"));
  EXPECT_FALSE(glob_match("lattice.leech_norm?", "lattice.leech_norm4x"));
  EXPECT_TRUE(glob_match("orders.*,fusion.trace_z", "fusion.trace_z"));
  EXPECT_TRUE(glob_match("*norm*", "lattice.bw16_norm4"));
  EXPECT_FALSE(glob_match("", "fusion.trace_z"));
}

TEST(Registry, IdsUniqueAndDocumentedRefs) {
  std::set<std::string> ids;
  const std::regex shape(R"((quadspace|fusion|lattice|cvcc|orders)\.[a-z0-9_]+)");
  for (const CheckSpec& s : registry()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_TRUE(std::regex_match(s.id, shape)) << s.id;
    EXPECT_FALSE(s.paper_ref.empty()) << s.id;
  }
}

TEST(Registry, UnknownFilterThrows) {
  EXPECT_THROW(run_checks({"nothing.here", 1, 1}), UnknownCheck);
}

TEST(Registry, FilterSelectsGroup) {
  const Report r = run_checks({"fusion.*", 1, 1});
  ASSERT_FALSE(r.checks.empty());
  for (const CheckResult& c : r.checks) EXPECT_EQ(c.id.rfind("fusion.", 0), 0u) << c.id;
  EXPECT_EQ(r.summary().fail, 0u);
}

TEST(Registry, SingleLeechCheck) {
  const Report r = run_checks({"lattice.leech_norm4", 1, 1});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].computed, "196560");
  EXPECT_EQ(r.checks[0].status, Status::kPass);
}

TEST(Registry, SeedsDifferPerCheck) {
  EXPECT_NE(check_seed(1, "cvcc.bound_audit"), check_seed(1, "cvcc.lift_consistency"));
  EXPECT_NE(check_seed(1, "cvcc.bound_audit"), check_seed(2, "cvcc.bound_audit"));
  EXPECT_EQ(check_seed(7, "x"), check_seed(7, "x"));
}

class FullRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { report_ = new Report(run_checks({"*", 1, 2})); }
  static void TearDownTestSuite() { delete report_; }
  static Report* report_;
};
Report* FullRun::report_ = nullptr;

TEST_F(FullRun, CleanRun) {
  const Summary s = report_->summary();
  EXPECT_EQ(s.fail, 0u);
  EXPECT_EQ(s.pass, registry().size());
  for (const CheckResult& c : report_->checks) {
    EXPECT_EQ(c.status, Status::kPass) << c.id << ": expected " << c.expected << ", computed " << c.computed << " "
                                       << c.detail;
    EXPECT_FALSE(c.paper_ref.empty());
  }
  EXPECT_EQ(report_->out_of_scope, out_of_scope_claims());
}

TEST_F(FullRun, DeterministicAcrossRunsAndThreads) {
  const Report again = run_checks({"*", 1, 1});
  EXPECT_EQ(emit_json(again), emit_json(*report_));
  EXPECT_EQ(emit_text(again), emit_text(*report_));
}

TEST_F(FullRun, JsonRoundTrip) {
  Report r = *report_;
  for (auto& c : r.checks) c.runtime_ms = 0;
  EXPECT_EQ(parse_json(emit_json(r)), r);
  const Report timed = parse_json(emit_json(*report_, true));
  EXPECT_EQ(timed, *report_);
}

TEST_F(FullRun, JsonSchemaFields) {
  const auto text = emit_json(*report_);
  for (const char* key : {"\"version\"", "\"seed\"", "\"checks\"", "\"summary\"", "\"out_of_scope\"", "\"paper_ref\"",
                          "\"expected\"", "\"computed\"", "\"status\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
  EXPECT_EQ(text.find("runtime_ms"), std::string::npos);
  EXPECT_NE(emit_json(*report_, true).find("runtime_ms"), std::string::npos);
}

TEST_F(FullRun, TextListsEveryCheck) {
  const std::string t = emit_text(*report_);
  for (const CheckResult& c : report_->checks) EXPECT_NE(t.find(c.id), std::string::npos) << c.id;
  EXPECT_NE(t.find("0 failed"), std::string::npos);
}

TEST(Report, ParseRejectsBadSummary) {
  Report r;
  r.checks.push_back({"orders.sym3", "ref", "6", "6", ValueKind::kInteger, Status::kPass, "", 0});
  std::string j = emit_json(r);
  ASSERT_NE(j.find("\"pass\": 1"), std::string::npos);
  j.replace(j.find("\"pass\": 1"), 9, "\"pass\": 2");
  EXPECT_THROW(parse_json(j), std::invalid_argument);
}

TEST(Report, UnwritablePathThrows) {
  EXPECT_THROW(emit_report(Report{}, ReportFormat::kJson, "/nonexistent-dir/x/report.json"), std::runtime_error);
}

TEST(Report, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "monstrous_report_test.json";
  Report r;
  r.seed = 9;
  emit_report(r, ReportFormat::kJson, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_json(ss.str()), r);
  std::filesystem::remove(path);
}

TEST(Config, ParsesKeyValueLines) {
  const auto cfg = parse_config("# defaults\nseed = 12\n\n threads=3  # inline\nformat = json\n");
  EXPECT_EQ(cfg.size(), 3u);
  EXPECT_EQ(cfg.at("seed"), "12");
  EXPECT_EQ(cfg.at("threads"), "3");
  EXPECT_EQ(cfg.at("format"), "json");
  EXPECT_THROW(parse_config("seed 12\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("= 4\n"), std::invalid_argument);
  EXPECT_THROW(load_config("/nonexistent/monstrous.cfg"), std::invalid_argument);
}

// Every check id quoted in the README exists, and every registered check is documented.
TEST(DocSync, ReadmeMatchesRegistry) {
  std::ifstream in(std::string(MONSTROUS_SOURCE_DIR) + "/README.md");
  ASSERT_TRUE(in) << "README.md not found";
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string doc = ss.str();
  std::set<std::string> registered;
  for (const CheckSpec& s : registry()) registered.insert(s.id);

  const std::regex id(R"(`((quadspace|fusion|lattice|cvcc|orders)\.[a-z0-9_]+)`)");
  std::set<std::string> mentioned;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), id); it != std::sregex_iterator(); ++it)
    mentioned.insert((*it)[1].str());
  for (const std::string& m : mentioned) EXPECT_TRUE(registered.count(m)) << "README mentions unknown check " << m;
  for (const std::string& r : registered) EXPECT_TRUE(mentioned.count(r)) << "check not documented: " << r;
}

}  // namespace
}  // namespace monstrous::harness
