#include <gtest/gtest.h>

#include <sstream>

#include "cli/app.hpp"
#include "cli/report.hpp"
#include "json.hpp"

using gpade::cli::run;

namespace {

const std::string kData = GPADE_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

nlohmann::json find_row(const nlohmann::json& doc, const std::string& item) {
  for (const auto& row : doc["rows"]) {
    if (row.value("item", "") == item) return row;
  }
  return nullptr;
}

}  // namespace

TEST(Cli, VerifyHalfInstance) {
  Outcome o = invoke({"verify", "--params", kData + "/half.txt", "--n", "1", "--n0", "1", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(find_row(doc, "omega")["value"], "4/75");
  EXPECT_EQ(find_row(doc, "omega_exponent")["value"], 3);
}

TEST(Cli, ConstantsTheoremThree) {
  Outcome o = invoke({"constants", "--theorem", "3", "--params", kData + "/half.txt", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto row = find_row(nlohmann::json::parse(o.out), "log_C");
  ASSERT_FALSE(row.is_null());
  double lower = std::stod(row["value"]["lower"].get<std::string>());
  double upper = std::stod(row["value"]["upper"].get<std::string>());
  EXPECT_NEAR(lower, 24.1589, 1e-3);
  EXPECT_NEAR(upper, 24.1589, 1e-3);
  EXPECT_EQ(row["value"]["precision_bits"], 256);
}

TEST(Cli, IntegerDifferenceIsUsageError) {
  Outcome o = invoke({"construct", "--params", kData + "/integer_difference.txt"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("IntegerDifference"), std::string::npos) << o.err;
  EXPECT_EQ(lines(o.out).size(), 1u);
  EXPECT_EQ(lines(o.out)[0], "instance\tpoly\ti\tj\tk\tcoefficient");
}

TEST(Cli, ParameterFileDiagnosticsCarryLine) {
  Outcome o = invoke({"verify", "--params", kData + "/bad_line.txt"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
}

TEST(Cli, FieldDiagnostics) {
  Outcome missing = invoke({"verify"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--params"), std::string::npos);
  Outcome floating = invoke({"padic", "--alpha", "1,1/2", "--beta", "2.5", "--p", "2"});
  EXPECT_EQ(floating.code, 2);
  EXPECT_NE(floating.err.find("--beta"), std::string::npos) << floating.err;
  Outcome not_prime = invoke({"padic", "--alpha", "1,1/2", "--beta", "8/3", "--p", "4"});
  EXPECT_EQ(not_prime.code, 2);
  EXPECT_NE(not_prime.err.find("--p"), std::string::npos);
  Outcome shape = invoke({"verify", "--alpha", "1,1/2", "--n", "1,2"});
  EXPECT_EQ(shape.code, 2);
  EXPECT_NE(shape.err.find("--n"), std::string::npos);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--alpha", "1,1/2", "--format", "xml"}).code, 2);
}

TEST(Cli, DomainAndHypothesisErrors) {
  Outcome outside = invoke({"padic", "--alpha", "1,1/2", "--beta", "4/3", "--p", "2"});
  EXPECT_EQ(outside.code, 2);
  EXPECT_NE(outside.err.find("DomainViolation"), std::string::npos);
  Outcome multi = invoke({"restricted", "--alpha", "1,1/2,1/3"});
  EXPECT_EQ(multi.code, 2);
  Outcome small_b = invoke({"restricted", "--alpha", "1,1", "--beta", "1/1000", "--theta-mode", "sharp"});
  EXPECT_EQ(small_b.code, 2);
  EXPECT_NE(small_b.err.find("HypothesisFailure"), std::string::npos);
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  std::vector<std::string> base = {"verify", "--params", kData + "/half.txt", "--params", kData + "/log.txt",
                                   "--alpha", "1/3,1/2,3/4", "--alpha", "2,1/5", "--n0", "3"};
  Outcome a = invoke(base);
  Outcome b = invoke(base);
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  Outcome c = invoke(parallel);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(a.code, 0) << a.err;
  auto rows = lines(a.out);
  EXPECT_NE(rows[1].find("half.txt"), std::string::npos);
  EXPECT_EQ(rows.back().rfind("alpha=2,1/5", 0), 0u);
}

TEST(Cli, JsonRoundTrips) {
  Outcome o = invoke({"padic", "--alpha", "1,1/2", "--beta", "8/3", "--p", "2", "--ell", "5,-4", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
  EXPECT_EQ(doc.dump(2) + "\n", o.out);
  Outcome tsv = invoke({"padic", "--alpha", "1,1/2", "--beta", "8/3", "--p", "2", "--ell", "5,-4"});
  EXPECT_EQ(lines(tsv.out).size(), doc["rows"].size() + 1);
  auto witness = find_row(doc, "witness");
  EXPECT_EQ(witness["value"], "785400");
  bool unmet = false;
  for (const auto& row : doc["rows"]) unmet = unmet || row.value("verdict", "") == "UNMET";
  EXPECT_TRUE(unmet);
}

TEST(Cli, ScaledConstructIsIntegral) {
  Outcome o = invoke({"construct", "--alpha", "1,1/2", "--n", "2", "--n0", "3", "--scaled", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  auto doc = nlohmann::json::parse(o.out);
  ASSERT_FALSE(doc["rows"].empty());
  for (const auto& row : doc["rows"]) {
    EXPECT_EQ(row["coefficient"].get<std::string>().find('/'), std::string::npos) << row.dump();
  }
}

TEST(Cli, AbbreviatesUnlessExact) {
  std::vector<std::string> args = {"restricted", "--alpha", "1,1", "--theta-mode", "sharp", "--vartheta", "2"};
  Outcome short_form = invoke(args);
  ASSERT_EQ(short_form.code, 0) << short_form.err;
  EXPECT_NE(short_form.out.find("digits)"), std::string::npos);
  args.push_back("--exact");
  Outcome full = invoke(args);
  ASSERT_EQ(full.code, 0);
  EXPECT_EQ(full.out.find("digits)"), std::string::npos);
  EXPECT_GT(full.out.size(), short_form.out.size());
}

TEST(Cli, GlobalProbe) {
  Outcome two = invoke({"global", "--alpha", "1,1", "--beta", "2", "--ell", "0,1", "--k", "64"});
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("below precision"), std::string::npos);
  Outcome three = invoke({"global", "--alpha", "1,1", "--beta", "3", "--ell", "0,1", "--format", "json"});
  auto row = find_row(nlohmann::json::parse(three.out), "L");
  EXPECT_EQ(row["value"], "1");
  EXPECT_EQ(invoke({"global", "--alpha", "1,1", "--beta", "3/2", "--ell", "0,1"}).code, 2);
}

TEST(Report, FormattingHelpers) {
  using namespace gpade::cli;
  EXPECT_EQ(abbreviate("12345"), "12345");
  std::string big(57, '7');
  EXPECT_EQ(abbreviate(big), "777777777777...777777777777 (57 digits)");
  EXPECT_EQ(abbreviate("-" + big), "-777777777777...777777777777 (57 digits)");
  Row interval{{"lower", "1.5"}, {"upper", "1.6"}, {"precision_bits", 64}};
  EXPECT_EQ(tsv_cell(interval), "[1.5, 1.6]@64");
  EXPECT_EQ(tsv_cell(Row("a\tb")), "a b");
  Report empty{"verify", {"instance", "item"}, {}, 0, {}};
  std::ostringstream out;
  emit_tsv(empty, out);
  EXPECT_EQ(out.str(), "instance\titem\n");
}
