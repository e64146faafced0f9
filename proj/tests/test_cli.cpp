#include "antisym/rational.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ANTISYM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args + " --format json");
  EXPECT_EQ(r.exit_code, 0) << args;
  return nlohmann::json::parse(r.out);
}

antisym::Rational exact_of(const nlohmann::json& j) {
  return antisym::make_rational(antisym::Integer(j["num"].get<std::string>()), antisym::Integer(j["den"].get<std::string>()));
}

const nlohmann::json& row(const nlohmann::json& doc, const std::string& quantity) {
  for (const auto& r : doc["results"])
    if (r["quantity"] == quantity) return r;
  static const nlohmann::json missing;
  ADD_FAILURE() << "no row " << quantity;
  return missing;
}

}  // namespace

TEST(Cli, SquashedEvenAndOdd) {
  const auto d4 = run_json("squashed --d 4");
  EXPECT_EQ(d4["argmin_k"], 3);
  EXPECT_NEAR(d4["results"][0]["value"].get<double>(), 0.5849625007, 1e-9);
  const auto d5 = run_json("squashed --d 5");
  EXPECT_EQ(d5["argmin_k"], 3);
  EXPECT_NEAR(d5["results"][0]["value"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, SquashedAllK) {
  const auto doc = run_json("squashed --d 3 --all-k");
  ASSERT_EQ(doc["cmi_table"].size(), 2u);
  EXPECT_EQ(doc["cmi_table"][0]["k"], 2);
  EXPECT_EQ(doc["cmi_table"][1]["k"], 3);
}

TEST(Cli, LpZetaExamples) {
  const auto doc = run_json("lp zeta --n 10 --dinf --form truncated2");
  EXPECT_EQ(exact_of(row(doc, "zeta")["exact"]), antisym::make_rational(12, 283));
  EXPECT_TRUE(doc["strong_duality"].get<bool>());
  const auto d3 = run_json("lp zeta --n 2 --d 3 --form full3");
  EXPECT_EQ(exact_of(row(d3, "zeta")["exact"]), antisym::make_rational(1, 4));
}

TEST(Cli, LpDual) {
  const auto doc = run_json("lp dual --n 8");
  EXPECT_EQ(exact_of(doc["z"]), antisym::make_rational(6561, 65536));
  EXPECT_TRUE(doc["feasible"].get<bool>());
  EXPECT_EQ(doc["delta"].size(), 9u);
  const auto custom = run_json("lp dual --n 2 --beta 0 --gamma 1/4");
  EXPECT_EQ(exact_of(custom["z"]), 1);
  const auto solved = run_json("lp dual --n 6 --solve");
  EXPECT_EQ(exact_of(solved["dual_optimum"]), antisym::make_rational(1, 7));
}

TEST(Cli, VerifyRep) {
  const auto d3 = run("verify rep --d 3");
  EXPECT_EQ(d3.exit_code, 0);
  const auto doc = run_json("verify rep --d 4 --level full");
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["overlap_table"].size(), 9u);
  EXPECT_EQ(run("verify rep --d 2").exit_code, 2);
  EXPECT_EQ(run("verify rep --d 8").exit_code, 2);
}

TEST(Cli, Bounds) {
  const auto doc = run_json("bounds --d 4 --n 8");
  EXPECT_NEAR(row(doc, "E_sq / K_D upper")["value"].get<double>(), 0.5849625007, 1e-9);
  EXPECT_NEAR(row(doc, "E_C lower (analytic)")["value"].get<double>(), 0.4150374993, 1e-9);
  bool found = false;
  for (const auto& r : doc["results"]) {
    if (r["quantity"] == "E_C lower (lp)" && r["d"] == "inf") {
      EXPECT_EQ(exact_of(r["exact"]), antisym::make_rational(5, 66));
      EXPECT_NEAR(r["value"].get<double>(), -std::log2(5.0 / 66.0) / 8, 1e-12);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  const auto d5 = run_json("bounds --d 5 --n 1");
  EXPECT_NEAR(row(d5, "E_sq / K_D upper")["value"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, Purity) {
  const auto doc = run_json("purity --d 3 --n 2 --restarts 20 --iters 500 --seed 7");
  EXPECT_NEAR(row(doc, "see-saw purity")["value"].get<double>(), 0.25, 1e-6);
  EXPECT_TRUE(doc["sandwich_ok"].get<bool>());
}

TEST(Cli, JsonIsDeterministicAndRoundTrips) {
  const std::string args = "purity --d 3 --n 1 --restarts 3 --iters 50 --seed 9 --format json";
  EXPECT_EQ(run(args).out, run(args).out);
  const auto doc = run_json("lp zeta --n 6 --dinf --form truncated2");
  for (const auto& r : doc["results"]) {
    if (r["exact"].is_null()) continue;
    const antisym::Rational q = exact_of(r["exact"]);
    EXPECT_EQ(q.get_num().get_str(), r["exact"]["num"].get<std::string>());
    EXPECT_EQ(q.get_den().get_str(), r["exact"]["den"].get<std::string>());
  }
}

TEST(Cli, CsvSchema) {
  const auto r = run("lp zeta --n 4 --dinf --form truncated2 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "quantity,n,d,exact_num,exact_den,decimal,paper_ref");
  EXPECT_NE(r.out.find("zeta,4,inf,1,4,0.250000000000"), std::string::npos);
}

TEST(Cli, TextIsDefault) {
  const auto r = run("squashed --d 4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("argmin k = 3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("squashed").exit_code, 2);
  EXPECT_EQ(run("squashed --d 2").exit_code, 2);
  EXPECT_EQ(run("lp zeta --n 2 --d 5 --form truncated2").exit_code, 2);
  EXPECT_EQ(run("lp zeta --n 2 --d 5 --dinf").exit_code, 2);
  EXPECT_EQ(run("lp zeta --n 2 --dinf --form full3 --parity even").exit_code, 0);
  EXPECT_EQ(run("lp zeta --n 2 --dinf --form truncated2 --parity even").exit_code, 2);
  EXPECT_EQ(run("lp dual --n 2 --beta abc").exit_code, 2);
  EXPECT_EQ(run("squashed --d 4 --format xml").exit_code, 2);
  EXPECT_EQ(run("purity --d 4 --n 5").exit_code, 2);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "antisym_cli_out.json";
  ASSERT_EQ(run("squashed --d 6 --format json --out " + path).exit_code, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  char buf[64] = {};
  ASSERT_GT(std::fread(buf, 1, sizeof buf - 1, f), 0u);
  std::fclose(f);
  EXPECT_EQ(buf[0], '{');
}
