#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hooklie/cache.hpp"
#include "hooklie/report.hpp"
#include "hooklie/verify.hpp"
#include "oracles.hpp"

using namespace hooklie;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hooklie-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CharacterCache, RoundTripInMemory) {
  const auto doc = character_table_json(6);
  EXPECT_EQ(validate_character_table(doc, 6), 6);
  character_memo().clear();
  load_character_table(doc, 6);
  EXPECT_EQ(character_table_json(6), doc);
}

TEST(CharacterCache, RoundTripOnDisk) {
  TempDir dir;
  const auto path = dump_character_table(dir.path(), 6);
  EXPECT_EQ(path.filename(), "chartable-n6.json");
  character_memo().clear();
  EXPECT_TRUE(load_character_table_file(dir.path(), 6));
  EXPECT_FALSE(load_character_table_file(dir.path(), 7));
  EXPECT_EQ(character_table_json(6), read_json_file(path));
}

TEST(CharacterCache, VersionMismatchIsRejected) {
  auto doc = character_table_json(4);
  doc["version"] = 2;
  try {
    load_character_table(doc, 4);
    FAIL() << "accepted a wrong version";
  } catch (const CacheError& e) {
    EXPECT_NE(std::string(e.what()).find("version mismatch"), std::string::npos);
  }
}

TEST(CharacterCache, ChecksumFailureIsRejected) {
  auto doc = character_table_json(4);
  doc["entries"][3]["value"] = "5";
  try {
    validate_character_table(doc, 4);
    FAIL() << "accepted a tampered table";
  } catch (const CacheError& e) {
    EXPECT_NE(std::string(e.what()).find("checksum"), std::string::npos);
  }
}

TEST(CharacterCache, WrongDegreeAndShapeAreRejected) {
  EXPECT_THROW(validate_character_table(character_table_json(4), 5), CacheError);
  auto doc = character_table_json(4);
  doc["entries"].erase(doc["entries"].begin());
  doc["checksum"] = detail::checksum_of(doc["entries"]);
  EXPECT_THROW(validate_character_table(doc, 4), CacheError);
}

TEST(CharacterCache, ContradictingValueIsRejected) {
  auto doc = character_table_json(3);
  character_memo().clear();
  mn_character(Partition({2, 1}), Partition({3}));  // memoize the true value, -1
  for (auto& e : doc["entries"])
    if (e["lambda"] == nlohmann::ordered_json{2, 1} && e["mu"] == nlohmann::ordered_json{3}) e["value"] = "4";
  doc["checksum"] = detail::checksum_of(doc["entries"]);
  EXPECT_THROW(load_character_table(doc, 3), CacheError);
  character_memo().clear();
}

TEST(CharacterCache, CorruptFileIsNeverOverwritten) {
  TempDir dir;
  const auto path = dump_character_table(dir.path(), 5);
  std::string text = slurp(path);
  text.replace(text.find("\"version\": 1"), 12, "\"version\": 9");
  std::ofstream(path) << text;
  EXPECT_THROW(dump_character_table(dir.path(), 5), CacheError);
  EXPECT_EQ(slurp(path), text);
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_character_table_file(dir.path(), 5), CacheError);
}

TEST(CharacterCache, ColdAndWarmRunsAgree) {
  TempDir dir;
  RunConfig cfg;
  cfg.n_max = 6;
  character_memo().clear();
  const auto cold = run_verify("gr-fibers", cfg).payload();
  for (int n = 1; n <= 6; ++n) dump_character_table(dir.path(), n);
  character_memo().clear();
  cfg.cache_dir = dir.path().string();
  const auto warm = run_verify("gr-fibers", cfg).payload();
  cfg.cache_dir.reset();
  EXPECT_EQ(cold.dump(), run_verify("gr-fibers", cfg).payload().dump());
  // the cache directory is not part of the echoed parameters
  EXPECT_EQ(cold.dump(), warm.dump());
  EXPECT_TRUE(cold["passed"].get<bool>());
}

TEST(ReportTest, PayloadIsDeterministicAcrossThreadCounts) {
  for (const auto& suite : verify_suites()) {
    RunConfig cfg;
    cfg.n_max = 6;
    cfg.r_max = 12;
    cfg.s_max = 3;
    cfg.threads = 1;
    const auto serial = run_verify(suite, cfg);
    cfg.threads = 4;
    const auto parallel = run_verify(suite, cfg);
    EXPECT_EQ(serial.payload().dump(), parallel.payload().dump()) << suite;
    EXPECT_TRUE(serial.passed()) << suite << "\n" << serial.to_text();
    EXPECT_FALSE(serial.payload().contains("timing"));
    EXPECT_TRUE(serial.to_json().contains("timing"));
    for (const auto& a : serial.assertions) EXPECT_FALSE(a.statement.empty()) << suite << " " << a.name;
  }
}

TEST(ReportTest, Formats) {
  Report rep;
  rep.command = "demo";
  rep.check("ok", "one equals one", true);
  rep.check("bad", "two equals three", false, "2 != 3, really");
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.to_csv(), "assertion,passed,detail\nok,true,\nbad,false,2 != 3; really\n");
  EXPECT_NE(rep.to_text().find("[FAIL] bad"), std::string::npos);
  EXPECT_EQ(int_table({Int(0), Int("123456789012345678901234567890")}).dump(),
            R"([{"k":0,"value":"0"},{"k":1,"value":"123456789012345678901234567890"}])");
}

TEST(ReportTest, RunConfigValidation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.n_max = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.guard = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_THROW(run_verify("no-such-suite", RunConfig{}), std::invalid_argument);
}

TEST(ReportTest, ExtensionDumpShape) {
  auto sol = std::get<CyclicExtensionSolution>(construct_extension(Partition({4})));
  const std::string text = extension_dump(sol);
  std::size_t record_lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) record_lines += line.rfind("{\"perm\"", 0) == 0;
  EXPECT_EQ(record_lines, 6U);
  auto doc = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(doc["records"][0]["perm"], (nlohmann::ordered_json{2, 3, 4, 1}));
  EXPECT_EQ(doc["records"][0]["cdes"], (nlohmann::ordered_json{3, 4}));
  EXPECT_EQ(doc["fibers"].size(), 6U);
}

TEST(VerifyHelpers, ResidueCountsMatchEnumeration) {
  for (int n = 1; n <= 12; ++n) {
    auto dp = kw_subset_counts(n, n - 1);
    auto brute = oracle::residue_subsets(n, n - 1);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(dp[static_cast<std::size_t>(k)], brute[static_cast<std::size_t>(k)]);
  }
}
