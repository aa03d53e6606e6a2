#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "zg/classifier.hpp"
#include "zg/cli/commands.hpp"
#include "zg/cli/group_spec.hpp"

namespace zg::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(GroupSpecTest, ParsesCatalogSpecs) {
  EXPECT_EQ(parse_group_spec("Q8xC3")->order(), 24U);
  EXPECT_EQ(*parse_group_spec("C4"), *cyclic(4));
  const auto h = parse_group_spec("Q8xE2^2");
  EXPECT_EQ(h->order(), 32U);
  EXPECT_TRUE(classify(*h).is_hamiltonian_2group);
  EXPECT_EQ(parse_spec(" Q8 x E2 ^ 2 ").canonical(), "Q8xE2^2");
  EXPECT_EQ(*parse_group_spec("S3"), *symmetric3());
  EXPECT_EQ(*parse_group_spec("D5"), *dihedral(5));
  EXPECT_EQ(parse_group_spec("C2xC3xC2")->order(), 12U);
  EXPECT_EQ(parse_group_spec("E2^0")->order(), 1U);
}

TEST(GroupSpecTest, Errors) {
  const auto position_of = [](const std::string& text) -> long {
    try {
      parse_spec(text);
    } catch (const SpecError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of(""), 0);
  EXPECT_EQ(position_of("Z3"), 0);
  EXPECT_EQ(position_of("Q8xx"), 3);
  EXPECT_EQ(position_of("Q8 y"), 3);
  EXPECT_EQ(position_of("C"), 1);
  EXPECT_EQ(position_of("C0"), 0);
  EXPECT_EQ(position_of("Q8xD2"), 3);
  EXPECT_EQ(position_of("E2^8"), 0);
  EXPECT_GE(position_of("Q8xC17"), 0);   // order 136 over the guard
  EXPECT_GE(position_of("C200"), 0);
  EXPECT_EQ(position_of("C99999999999999999999999"), 1);
}

TEST(CliTest, CriterionExitCodesAndLibraryAgreement) {
  for (const auto& [spec, g] : testing::catalog()) {
    const std::string cli_spec = spec == "C2xC2" ? "C2xC2" : spec;
    const Invocation r = invoke({"criterion", cli_spec, "--json"});
    const bool predicted = criterion(*g).prediction;
    EXPECT_EQ(r.code, predicted ? exit_code::kOk : exit_code::kPredictionFalse) << spec;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["verdicts"]["symmetric_units_form_group"].get<bool>(), predicted) << spec;
  }
  const Invocation s3 = invoke({"criterion", "S3"});
  EXPECT_EQ(s3.code, exit_code::kPredictionFalse);
  EXPECT_NE(s3.out.find("branch: non-normal-subgroup"), std::string::npos);
  EXPECT_NE(s3.out.find("{1, (12)}"), std::string::npos);
}

TEST(CliTest, CounterexampleCommand) {
  const Invocation s3 = invoke({"counterexample", "S3"});
  EXPECT_EQ(s3.code, exit_code::kOk);
  EXPECT_NE(s3.out.find("x = (12), y = (13)"), std::string::npos);
  EXPECT_NE(s3.out.find("noncommuting: pass"), std::string::npos);

  EXPECT_EQ(invoke({"counterexample", "C6"}).code, exit_code::kNoCounterexample);
  EXPECT_EQ(invoke({"counterexample", "Q8"}).code, exit_code::kNoCounterexample);

  const Invocation q = invoke({"counterexample", "Q8xC3", "--json"});
  EXPECT_EQ(q.code, exit_code::kOk);
  const auto doc = nlohmann::json::parse(q.out);
  EXPECT_EQ(doc["parameters"]["construction"], "hoechsmann-derived");
  EXPECT_EQ(doc["parameters"]["parameters"]["k"], 5);
}

TEST(CliTest, ReproduceCommand) {
  const Invocation five = invoke({"reproduce", "--p", "5", "--json"});
  ASSERT_EQ(five.code, exit_code::kOk) << five.err;
  const auto doc = nlohmann::json::parse(five.out);
  EXPECT_EQ(doc["parameters"]["parameters"]["k"], 7);
  EXPECT_EQ(doc["parameters"]["parameters"]["scalar"], "-1");
  EXPECT_TRUE(doc["verdicts"]["residue_check"].get<bool>());
  EXPECT_TRUE(doc["verdicts"]["all_pass"].get<bool>());

  const Invocation three = invoke({"reproduce", "--p", "3"});
  EXPECT_EQ(three.code, exit_code::kOk);
  EXPECT_NE(three.out.find("i = 5, j = 5, k = 5"), std::string::npos);
  EXPECT_NE(three.out.find("s1·s2 ≠ s2·s1: pass"), std::string::npos);

  EXPECT_EQ(invoke({"reproduce", "--p", "4"}).code, exit_code::kInputError);
  EXPECT_EQ(invoke({"reproduce", "--p", "17"}).code, exit_code::kInputError);
}

TEST(CliTest, GoldenReproduceFiles) {
  for (const std::string p : {"3", "5", "7"}) {
    const Invocation r = invoke({"reproduce", "--p", p});
    ASSERT_EQ(r.code, exit_code::kOk);
    EXPECT_EQ(r.out, read_file(std::string(ZG_GOLDEN_DIR) + "/reproduce_p" + p + ".txt")) << p;
  }
}

TEST(CliTest, HoechsmannAndBicyclicCommands) {
  const Invocation h = invoke({"hoechsmann", "C5", "--element", "x", "--i", "2", "--j", "2", "--k", "3"});
  EXPECT_EQ(h.code, exit_code::kOk);
  EXPECT_NE(h.out.find("unit = x^2 − x^3 + x^4\n"), std::string::npos);
  EXPECT_NE(h.out.find("inverse = 1 − x^2 + x^4\n"), std::string::npos);

  const Invocation h2 = invoke({"hoechsmann", "Q8xC5", "--element", "a*x", "--i", "3", "--j", "3", "--k", "7", "--json"});
  EXPECT_EQ(h2.code, exit_code::kOk);
  EXPECT_EQ(nlohmann::json::parse(h2.out)["parameters"]["scalar"], "-1");

  EXPECT_EQ(invoke({"hoechsmann", "C5", "--element", "x", "--i", "2", "--j", "2", "--k", "2"}).code,
            exit_code::kInputError);
  EXPECT_EQ(invoke({"hoechsmann", "C5", "--element", "y", "--i", "1", "--j", "1", "--k", "1"}).code,
            exit_code::kInputError);

  const Invocation b = invoke({"bicyclic", "S3", "--x", "(12)", "--y", "(13)"});
  EXPECT_EQ(b.code, exit_code::kOk);
  EXPECT_NE(b.out.find("u·u* and u*·u commute: no"), std::string::npos);
  const Invocation bq = invoke({"bicyclic", "Q8", "--x", "a", "--y", "b", "--json"});
  EXPECT_TRUE(nlohmann::json::parse(bq.out)["verdicts"]["trivial"].get<bool>());
}

TEST(CliTest, SearchCommand) {
  const Invocation r = invoke({"search-units", "Q8", "--bound", "1", "--json"});
  EXPECT_EQ(r.code, exit_code::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["results"]["count"], 8);
  EXPECT_TRUE(doc["verdicts"]["all_trivial"].get<bool>());
  EXPECT_EQ(invoke({"search-units", "Q8xC2", "--bound", "1"}).code, exit_code::kInputError);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, exit_code::kUsageError);
  EXPECT_EQ(invoke({"criterion"}).code, exit_code::kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, exit_code::kUsageError);
  const Invocation bad = invoke({"criterion", "Q8xx"});
  EXPECT_EQ(bad.code, exit_code::kInputError);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("position 3"), std::string::npos);
  EXPECT_EQ(invoke({"--help"}).code, exit_code::kOk);
}

TEST(CliTest, JsonSchemaAndRoundTrip) {
  const std::vector<std::vector<std::string>> commands = {
      {"criterion", "Q8xC3", "--json"},
      {"counterexample", "S3", "--json"},
      {"reproduce", "--p", "7", "--json"},
      {"hoechsmann", "C5", "--element", "x", "--i", "2", "--j", "2", "--k", "3", "--json"},
      {"bicyclic", "D4", "--x", "s", "--y", "r", "--json"},
      {"search-units", "C3", "--bound", "2", "--json"},
  };
  for (const auto& args : commands) {
    const Invocation r = invoke(args);
    const auto doc = nlohmann::json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "group", "parameters", "results", "verdicts"}))
        << args[0];
    EXPECT_EQ(doc.dump(2) + "\n", r.out) << args[0];
    EXPECT_EQ(doc["command"], args[0]);
    // Rerunning gives identical bytes.
    EXPECT_EQ(invoke(args).out, r.out);
  }
}

TEST(CliTest, RingElementJsonTerms) {
  const auto c5 = cyclic(5);
  const auto json = ring_json(testing::from_terms(c5, {{"x^2", 1}, {"x^3", -1}, {"x^4", 1}}));
  EXPECT_EQ(json.dump(), R"([["x^2","1"],["x^3","-1"],["x^4","1"]])");
  const auto big = testing::from_terms(c5, {{"1", 1}});
  RingElement w = big;
  w[0] = mpz_class("123456789012345678901234567890");
  EXPECT_EQ(ring_json(w).dump(), R"([["1","123456789012345678901234567890"]])");
}

}  // namespace
}  // namespace zg::cli
