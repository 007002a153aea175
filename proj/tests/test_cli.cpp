#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qhopf/cli.hpp"

using namespace qhopf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("qhopf_cli_test_" + std::to_string(::getpid())) / name;
  fs::create_directories(d.parent_path());
  return d;
}

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args, const std::string& env = "") {
  fs::path out = scratch("stdout.txt");
  std::string cmd = env + " '" + std::string(QHOPF_CLI_PATH) + "' " + args + " > '" + out.string() + "' 2>&1";
  int st = std::system(cmd.c_str());
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(out)};
}

}  // namespace

TEST(Cli, VerifyQhopfAtPTwo) {
  fs::path j = scratch("q2.json");
  auto r = cli("verify --p 2 --t 1 --suite qhopf --json " + j.string());
  EXPECT_EQ(r.code, 0) << r.out;
  auto rep = nlohmann::json::parse(slurp(j));
  EXPECT_EQ(rep["schema_version"], kReportSchema);
  EXPECT_EQ(rep["parameters"]["p"], 2);
  bool found = false;
  long pass = 0;
  for (auto& c : rep["checks"]) {
    if (c["name"] == "factorisable: rank 16/16") found = true;
    if (c["status"] == "pass") ++pass;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(rep["summary"]["pass"], pass);
  EXPECT_EQ(rep["summary"]["total"], rep["checks"].size());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("verify --p 3 --t 2 --suite qhopf").code, 2);
  EXPECT_EQ(cli("verify --p 3 --t 1 --suite nothing").code, 2);
  EXPECT_EQ(cli("verify --p 3 --t 1 --zeta 2").code, 2);
  EXPECT_EQ(cli("verify --p 1 --t 1 --suite cartan").code, 2);
  EXPECT_EQ(cli("verify --t 1").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, ReportsAreByteStableAcrossJobCounts) {
  fs::path a = scratch("a.json"), b = scratch("b.json");
  ASSERT_EQ(cli("verify --p 2 --t 3 --suite cartan --S sym --no-timings --jobs 1 --json " + a.string()).code, 0);
  ASSERT_EQ(cli("verify --p 2 --t 3 --suite cartan --S sym --no-timings --jobs 3 --json " + b.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, TensorVerdicts) {
  auto legacy = cli("tensor --p 3 --left X-:1 --right O+:s=1:l=1,1 --coproduct legacy");
  EXPECT_EQ(legacy.code, 0);
  EXPECT_NE(legacy.out.find("orders NOT isomorphic"), std::string::npos) << legacy.out;
  auto t = cli("tensor --p 3 --left X-:1 --right O+:s=1:l=1,1 --coproduct t --t 1");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("isomorphic, witness τ∘R_t"), std::string::npos) << t.out;
  auto triv = cli("tensor --p 3 --left triv --right triv --coproduct legacy");
  EXPECT_NE(triv.out.find("left (x) right is the trivial module"), std::string::npos) << triv.out;
  EXPECT_EQ(cli("tensor --p 3 --left O+:s=9:l=1,1 --right triv").code, 2);
  EXPECT_EQ(cli("tensor --p 3 --left bogus --right triv").code, 2);
}

TEST(Cli, CacheLifecycle) {
  fs::path dir = scratch("cache");
  fs::remove_all(dir);
  std::string env = "QHOPF_CACHE_DIR='" + dir.string() + "'";
  EXPECT_EQ(cli("cache clear", env).code, 0);
  EXPECT_EQ(cli("cache build --p 3", env).code, 0);
  auto info = cli("cache info", env);
  EXPECT_NE(info.out.find("p=3 entries=9"), std::string::npos) << info.out;
  EXPECT_NE(info.out.find("p-coverage: 3"), std::string::npos) << info.out;
  std::string good = slurp(cache_file(dir, 3));
  {
    std::ofstream f(cache_file(dir, 3), std::ios::binary);
    f << "{\"schema_version\": 0, \"p\": 3, \"entries\": []}";
  }
  auto rebuilt = cli("cache build --p 3", env);
  EXPECT_EQ(rebuilt.code, 0);
  EXPECT_NE(rebuilt.out.find("warning"), std::string::npos) << rebuilt.out;
  EXPECT_EQ(slurp(cache_file(dir, 3)), good);
  EXPECT_EQ(cli("cache clear", env).code, 0);
  EXPECT_FALSE(fs::exists(cache_file(dir, 3)));
  // a regular file where the directory should be
  fs::path blocker = scratch("blocker");
  std::ofstream(blocker) << "x";
  EXPECT_EQ(cli("cache build --p 2", "QHOPF_CACHE_DIR='" + (blocker / "sub").string() + "'").code, 1);
}

TEST(Cli, CacheRoundTripReproducesTables) {
  for (int p : {2, 3, 4}) {
    auto table = Algebra::get(p)->table_entries();
    auto back = parse_cache(render_cache(p, table), p);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->size(), size_t(p * p));
    Algebra fresh(p);
    fresh.load_table(*back);
    EXPECT_EQ(render_cache(p, fresh.table_entries()), render_cache(p, table));
    std::string why;
    EXPECT_FALSE(parse_cache(render_cache(p, table), p + 1, &why).has_value());
    EXPECT_EQ(why, "file is for another p");
  }
}
