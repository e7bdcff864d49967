#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "repstab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = repstab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("repstab_test_" + name);
}

}  // namespace

TEST(Cli, SeriesExamples) {
  EXPECT_EQ(run({"series", "1", "--max-degree", "4"}).out, "-z^1 + 2z^2 - 2z^3 + 2z^4\n");
  EXPECT_EQ(run({"series", "0", "--max-degree", "2"}).out, "1 - z\n");
  EXPECT_EQ(run({"series", "2,1", "--max-degree", "6"}).out, "2z^2 - 7z^3 + 16z^4 - 30z^5 + 47z^6\n");
}

TEST(Cli, SeriesCsv) {
  const auto path = scratch("series.csv");
  const auto r = run({"series", "1", "--max-degree", "2", "--csv", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path), "partition,i,d_i\n1,0,0\n1,1,1\n1,2,2\n");
  std::filesystem::remove(path);
}

TEST(Cli, MalformedPartitionIsUsageError) {
  const auto r = run({"series", "1,0", "--max-degree", "3"});
  EXPECT_EQ(r.code, repstab::cli::kUsageError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"series", "1+2", "--max-degree", "3"}).code, repstab::cli::kUsageError);
  EXPECT_EQ(run({"series", "1"}).code, repstab::cli::kUsageError);
  EXPECT_EQ(run({"bogus"}).code, repstab::cli::kUsageError);
  EXPECT_EQ(run({}).code, repstab::cli::kUsageError);
  EXPECT_EQ(run({"series", "1", "--max-degree", "-1"}).code, repstab::cli::kUsageError);
}

TEST(Cli, HelpSucceeds) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, Cohomology) {
  EXPECT_EQ(run({"cohomology", "0"}).out, "V(0)\n");
  EXPECT_EQ(run({"cohomology", "1"}).out, "V(0) + V(1) + V(2)\n");
  const auto h2 = run({"cohomology", "2", "--threads", "2"}).out;
  EXPECT_TRUE(h2.ends_with("V(3,1)\n"));
  EXPECT_EQ(std::count(h2.begin(), h2.end(), 'V'), 6);
}

TEST(Cli, TableReproducesGoldenRows) {
  const auto path = scratch("table.csv");
  const auto r = run({"table", "--max-size", "3", "--max-degree", "30", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "partition,i,d_i");
  std::map<std::string, std::vector<std::string>> values;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto a = line.find(','), b = line.rfind(',');
    values[line.substr(0, a)].push_back(line.substr(b + 1));
  }
  EXPECT_EQ(rows, 7 * 31);
  EXPECT_EQ(values["2+1"][6], "47");
  EXPECT_EQ(values["3"][30], "832");
  EXPECT_EQ(values["1+1+1"].size(), 31u);
  std::filesystem::remove(path);
}

TEST(Cli, TableIoFailure) {
  const auto r = run({"table", "--max-size", "1", "--max-degree", "2", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, repstab::cli::kRuntimeFailure);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Cli, Charpoly) {
  EXPECT_EQ(run({"charpoly", "1"}).out, "(X1 C 1) - 1\n");
  EXPECT_EQ(run({"charpoly", "0"}).out, "1\n");
  EXPECT_EQ(run({"charpoly", "1+1"}).out, "(X1 C 2) - (X2 C 1) - (X1 C 1) + 1\n");
}

TEST(Cli, Chartable) {
  const auto r = run({"chartable", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "mu        3   2+1 1+1+1\n"
            "3         1     1     1\n"
            "2+1      -1     0     2\n"
            "1+1+1     1    -1     1\n");
  const auto path = scratch("chartable.csv");
  EXPECT_EQ(run({"chartable", "2", "--csv", path.string()}).code, 0);
  EXPECT_EQ(slurp(path), "mu,2,1+1\n2,1,1\n1+1,-1,1\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify", "--max-i", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
