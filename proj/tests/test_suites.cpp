#include <gtest/gtest.h>

#include "qsurf/suites.hpp"

using namespace qsurf;

class BuiltinSuite : public testing::TestWithParam<std::string> {};

TEST_P(BuiltinSuite, PassesOnASmallRun) {
  SuiteOptions options;
  options.seed = 1234;
  options.cases = 40;
  options.max_word = 7;
  const SuiteResult r = run_suite(GetParam(), options);
  std::string failures;
  for (const std::string& f : r.failures) failures += f + "\n";
  EXPECT_TRUE(r.passed) << failures;
  EXPECT_GT(r.checks, 0);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, BuiltinSuite, testing::ValuesIn([] {
                           std::vector<std::string> names;
                           for (const NamedSuite& s : all_suites()) names.push_back(s.name);
                           return names;
                         }()),
                         [](const testing::TestParamInfo<std::string>& info) { return info.param; });

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suite("nope", {}), std::invalid_argument); }

TEST(Suites, SeedDeterminesResult) {
  SuiteOptions options;
  options.seed = 77;
  options.cases = 10;
  const SuiteResult a = run_suite("quasi_jacobi", options), b = run_suite("quasi_jacobi", options);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.failures, b.failures);
}
