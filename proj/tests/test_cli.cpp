#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oortscan/construct.hpp"
#include "oortscan/group_spec.hpp"
#include "oortscan/report.hpp"

#ifndef OORTSCAN_CLI_PATH
#error "OORTSCAN_CLI_PATH must point at the oortscan binary"
#endif

using namespace oortscan;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(std::string const &args, std::string const &env = {})
{
  std::string cmd = env + " " + OORTSCAN_CLI_PATH + " " + args + " 2>&1";
  Run r;
  FILE *f = popen(cmd.c_str(), "r");
  if (!f)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0)
    r.out.append(buf, n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path scratch_file(std::string const &name, std::string const &body)
{
  auto dir = std::filesystem::temp_directory_path() / "oortscan-cli-test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << body;
  return path;
}

} // namespace

TEST(Cli, ClassifyExitCodes)
{
  auto d18 = run("classify --family D:18 --p 3 --format machine");
  EXPECT_EQ(d18.code, 0) << d18.out;
  EXPECT_NE(d18.out.find("shape=D18"), std::string::npos);
  EXPECT_NE(d18.out.find("result=pass"), std::string::npos);

  auto q8 = run("classify --family Q:8 --p 2 --format machine");
  EXPECT_EQ(q8.code, 1) << q8.out;
  EXPECT_NE(q8.out.find("result=fail"), std::string::npos);

  EXPECT_EQ(run("classify --family Z:9 --p 3").code, 2);
  EXPECT_EQ(run("classify --family D:18 --p 4").code, 2);
  EXPECT_EQ(run("classify --p 3").code, 2);
}

TEST(Cli, ClassifyKleinFile)
{
  auto path = scratch_file("klein.grp", "# Klein four\ndegree 4\n(0 1)(2 3)\n(0 2)(1 3)\n");
  auto r = run("classify --file " + path.string() + " --p 2 --format machine");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("shape=D4"), std::string::npos);
  EXPECT_NE(r.out.find("input.file_fnv1a64="), std::string::npos);
}

TEST(Cli, ParseErrorsReportPosition)
{
  auto path = scratch_file("bad.grp", "degree 4\n(0 1)\n(0 9)\n");
  auto r = run("classify --file " + path.string() + " --p 2");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, CapEnvironmentOverride)
{
  EXPECT_EQ(run("classify --family S4 --p 2").code, 0);
  auto capped = run("classify --family S4 --p 2", "OORTSCAN_CAP=10");
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.out.find("cap 10"), std::string::npos) << capped.out;
}

TEST(Cli, MakeRoundTripsSmokeCorpus)
{
  for (auto const &e : corpus(Profile::Smoke)) {
    auto made = run("make --family '" + e.spec.str() + "'");
    ASSERT_EQ(made.code, 0) << e.spec.str() << "\n" << made.out;
    auto from_text = build_from_spec(parse_group_spec(made.out));
    EXPECT_EQ(from_text.elements(), build(e.spec).elements()) << e.spec.str();
  }
}

TEST(Cli, ScenarioExitCodes)
{
  for (auto const *s : {"odd_type4_lp --p 3", "odd_type45", "even_type34", "even_type56", "even_type7"}) {
    auto r = run(std::string("scenario ") + s + " --format machine");
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out;
    EXPECT_NE(r.out.find("obstruction=true"), std::string::npos) << s;
  }
  auto r = run("scenario even_type56 --format machine");
  EXPECT_NE(r.out.find("charp.branch_count=5"), std::string::npos);
  EXPECT_EQ(run("scenario nothing").code, 2);
}

TEST(Cli, GenusAndFiltration)
{
  auto as = run("genus as --p 3 --m 4 --format machine");
  EXPECT_EQ(as.code, 0);
  EXPECT_NE(as.out.find("genus=3"), std::string::npos) << as.out;

  auto cover = scratch_file("octic.cov", "order 8\nchar 2\npoint e=8 filtration=8,8,2,2,2,2\n");
  auto wild = run("genus wild --file " + cover.string() + " --format machine");
  EXPECT_EQ(wild.code, 0) << wild.out;
  EXPECT_NE(wild.out.find("genus=2"), std::string::npos) << wild.out;

  EXPECT_EQ(run("filtration check --orders 8,8,2,2,2,2 --p 2 --sub 2").code, 0);
  EXPECT_EQ(run("filtration check --orders 8,8,2,2 --p 2 --sub 2").code, 1);
  auto up = run("filtration upper --orders 8,8,2,2,2,2 --p 2 --format machine");
  EXPECT_EQ(up.code, 0);
  EXPECT_NE(up.out.find("2"), std::string::npos);
}

TEST(Cli, CorpusMachineOutputIsDeterministic)
{
  auto a = run("corpus --profile smoke --p 2,3 --format machine --jobs 4");
  auto b = run("corpus --profile smoke --p 2,3 --format machine --jobs 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(strip_timing(a.out), strip_timing(b.out));
  EXPECT_NE(a.out.find("mismatch=0"), std::string::npos) << a.out.substr(a.out.size() - 300);
}
