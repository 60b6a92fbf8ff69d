#include <filesystem>
#include <fstream>
#include <map>

#include <gtest/gtest.h>

#include <fishburn/verify.hpp>

using namespace fishburn;
namespace fs = std::filesystem;

namespace {

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.cases)
    if (!c.pass) out += c.id + ": expected " + c.expected + ", got " + c.actual + "\n";
  return out;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("fishburn-verify-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const Report& cached(const std::string& name) {
  static std::map<std::string, Report> reports;
  auto it = reports.find(name);
  if (it == reports.end()) it = reports.emplace(name, verify_suite(name)).first;
  return it->second;
}

}  // namespace

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, Passes) {
  const Report& r = cached(GetParam());
  EXPECT_EQ(r.suite, GetParam());
  EXPECT_GT(r.cases.size(), 0u);
  EXPECT_TRUE(r.ok()) << failures(r);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteTest, ::testing::ValuesIn(suite_names()));

TEST(VerifyAll, MergesEverySuite) {
  Report all{"all", {}};
  for (const auto& n : suite_names()) all.merge(cached(n));
  std::size_t total = 0;
  for (const auto& n : suite_names()) total += cached(n).cases.size();
  EXPECT_EQ(all.cases.size(), total);
  EXPECT_EQ(all.cases.front().id.rfind("closed_vs_recurrence/", 0), 0u);
  EXPECT_EQ(verify_suite("closed_vs_recurrence").cases.size(), cached("closed_vs_recurrence").cases.size());
  EXPECT_THROW(verify_suite("missing"), error);
}

TEST(VerifyFixture, CorruptedFileFails) {
  TempDir dir;
  fs::copy_file(fs::path(FISHBURN_DATA_DIR) / "oeis" / "A158691.txt", dir.path() / "A158691.txt");
  std::ofstream(dir.path() / "A179525.txt") << "# bad\n1 1\n2 3\n";
  Report r = verify_oeis_fixture({dir.path()});
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.fail_count(), 1u);
  for (const auto& c : r.cases)
    if (!c.pass) {
      EXPECT_EQ(c.id, "A179525/n=2");
      EXPECT_EQ(c.expected, "3");
      EXPECT_EQ(c.actual, "2");
    }
}

TEST(VerifyFixture, MissingOrMalformedFileIsLoadFailure) {
  TempDir dir;
  std::ofstream(dir.path() / "A179525.txt") << "1 one\n";
  Report r = verify_oeis_fixture({dir.path()});
  EXPECT_EQ(r.fail_count(), 2u);
  std::size_t loads = 0;
  for (const auto& c : r.cases) loads += !c.pass && c.id.ends_with("/load");
  EXPECT_EQ(loads, 2u);
}

TEST(VerifyFixture, BundledFilesMatchIndependentValues) {
  auto a = detail::read_fixture(fs::path(FISHBURN_DATA_DIR) / "oeis" / "A179525.txt");
  auto b = detail::read_fixture(fs::path(FISHBURN_DATA_DIR) / "oeis" / "A158691.txt");
  const std::vector<long> r{1, 2, 7, 33, 197}, q{1, 3, 12, 61, 380};
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(a.at(n), r[n - 1]);
    EXPECT_EQ(b.at(n), q[n - 1]);
  }
}

TEST(VerifyReport, JsonShape) {
  Report r{"demo", {}};
  r.add("same", mpz_class(3), mpz_class(3));
  r.add("differ", "a", "b");
  auto p = TruncationProfile{}.with(Var::x, 3);
  r.add("series", MultiSeries::variable(Var::x, p), MultiSeries::constant(1, p));
  auto j = to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["pass_count"], 1);
  EXPECT_EQ(j["fail_count"], 2);
  ASSERT_EQ(j["cases"].size(), 3u);
  EXPECT_EQ(j["cases"][0]["pass"], true);
  EXPECT_EQ(j["cases"][1]["expected"], "a");
  EXPECT_EQ(j["cases"][2]["expected"], "[1] 0");
  EXPECT_EQ(j["cases"][2]["actual"], "[1] 1");
}
