#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(CVC3_BINARY) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cvc3_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name);
  }

  fs::path dir_;
};

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

TEST_F(Cli, FamilyThenReport) {
  ASSERT_EQ(run("family cvc-minus1 --mu 1 --out " + path("e11.json")).code, 0);
  const CliResult r = run("report " + path("e11.json") + " --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cvc[0].epsilon = -1.0\ncvc[0].extremality = \"SEC_AT_LEAST\"")) << r.out;
  EXPECT_TRUE(contains(r.out, "cvc[0].is_cvc = true"));
  EXPECT_TRUE(contains(r.out, "cvc[0].lambda = 1.0"));
  EXPECT_TRUE(contains(r.out, "milnor.group = \"E11\""));
}

TEST_F(Cli, TypeTwoReportShowsLambda) {
  ASSERT_EQ(run("family cvc1-type2 --c 1.5 --out " + path("t2.json")).code, 0);
  const CliResult r = run("report " + path("t2.json") + " --epsilon 1 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"lambda\": -4.0")) << r.out;
  EXPECT_TRUE(contains(r.out, "\"group\": \"SL2R_UNIVERSAL_COVER\""));
}

TEST_F(Cli, MinusOneWithMuTwoIsSl2) {
  const CliResult fam = run("family cvc-minus1 --mu 2");
  ASSERT_EQ(fam.code, 0);
  const CliResult r = run("report " + write("m2.json", fam.out) + " --format json");
  EXPECT_TRUE(contains(r.out, "\"group\": \"SL2R_UNIVERSAL_COVER\"")) << r.out;
}

TEST_F(Cli, SolvableFamilyIsFlagged) {
  ASSERT_EQ(run("family cvc0-solvable --f 1 --g 2 --out " + path("s.json")).code, 0);
  const CliResult r = run("report " + path("s.json") + " --epsilon 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cvc[0].lambda = -5.0")) << r.out;
  EXPECT_TRUE(contains(r.out, "family_match.no_finite_volume_quotient = true"));
}

TEST_F(Cli, ReportIsByteIdentical) {
  ASSERT_EQ(run("family cvc1-type1 --mu 0.5 --out " + path("t1.json")).code, 0);
  const CliResult a = run("report " + path("t1.json") + " --format json --seed 9");
  const CliResult b = run("report " + path("t1.json") + " --format json --seed 9");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, AbelianReport) {
  const CliResult r = run("report " +
                    write("ab.json", R"({"kind":"metric_lie_algebra",
                      "structure_constants":[[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]],
                      "gram":[[1,0,0],[0,1,0],[0,0,1]]})") +
                    " --epsilon 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cvc[0].isotropic = true"));
  EXPECT_TRUE(contains(r.out, "cvc[0].is_cvc = true"));
}

TEST_F(Cli, InputErrorsExitTwo) {
  const std::string broken = write("broken.json", R"({"kind":"metric_lie_algebra",
      "structure_constants":[[[0,0,0],[0,0,1],[0,0,0]],[[0,0,-1],[0,0,0],[0,1,0]],[[0,0,0],[0,-1,0],[0,0,0]]],
      "gram":[[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(run("report " + broken).code, 2);
  const std::string cmd = std::string(CVC3_BINARY) + " report " + broken + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[512] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  EXPECT_TRUE(contains(std::string(buf, n), "jacobi_identity")) << buf;

  EXPECT_EQ(run("report " + write("junk.json", "{not json")).code, 2);
  EXPECT_EQ(run("report " + path("missing.json")).code, 2);
  EXPECT_EQ(run("family cvc1-type1 --mu 2").code, 2);
  EXPECT_EQ(run("family berger").code, 2);
  EXPECT_EQ(run("report").code, 2);
  EXPECT_EQ(run("rank space-form --epsilon -1 --dir e1").code, 2);
  EXPECT_EQ(run("ode --epsilon 2").code, 2);
}

TEST_F(Cli, OdeStationaryClass) {
  const CliResult r = run("ode --epsilon -1 --trA0 0 --detA0 -1 --t-min -1 --t-max 1 --step 0.5 --out " +
                    path("s.csv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "asymptotic class: S_0_0\n");
  std::ifstream is(path("s.csv"));
  std::stringstream ss;
  ss << is.rdbuf();
  EXPECT_EQ(ss.str(),
            "t,ell,trA,detA,lambda,b,sigma,tau,f,g,theta\n"
            "-1,1,0,-1,0,0,0,0,0,0,nan\n"
            "-0.5,1,0,-1,0,0,0,0,0,0,nan\n"
            "0,1,0,-1,0,0,0,0,0,0,nan\n"
            "0.5,1,0,-1,0,0,0,0,0,0,nan\n"
            "1,1,0,-1,0,0,0,0,0,0,nan\n");
}

TEST_F(Cli, OdeParabola) {
  const CliResult r = run("ode --epsilon 0 --trA0 2 --detA0 1 --t-min -0.5 --t-max 5 --step 0.01");
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "t,ell,trA,detA,lambda,b,sigma,tau,f,g,theta");
  int rows = 0;
  while (std::getline(is, line)) {
    const double t = std::stod(line);
    const double ell = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(ell, (t + 1) * (t + 1), 1e-8 * (t + 1) * (t + 1)) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 551);
}

TEST_F(Cli, OdeThroughZeroOfEllExitsThree) {
  EXPECT_EQ(run("ode --epsilon 0 --trA0 2 --detA0 1 --t-min -2 --t-max 1").code, 3);
}

TEST_F(Cli, RankVerdicts) {
  const CliResult h3 = run("rank space-form --epsilon -1");
  EXPECT_EQ(h3.code, 0);
  EXPECT_TRUE(contains(h3.out, "witness found")) << h3.out;
  for (const char* mu : {"1", "5"}) {
    const CliResult r = run(std::string("rank cvc-minus1 --mu ") + mu + " --dir e1");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "no witness")) << r.out;
  }
  EXPECT_TRUE(contains(run("rank cvc-minus1 --mu 2").out, "no witness"));
}

TEST_F(Cli, Verify) {
  const std::string good =
      write("t2.json", R"({"kind":"christoffel_table","a11":0,"a12":1,"a21":-1,"a22":0,"f":0,"g":0,"c":1.5})");
  const CliResult ok = run("verify " + good + " --epsilon 1 --lambda -4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(contains(ok.out, "R1221 = 0\n")) << ok.out;
  EXPECT_TRUE(contains(ok.out, "homogeneous cvc solution"));
  const std::string bumped =
      write("b.json", R"({"kind":"christoffel_table","a11":0,"a12":1.1,"a21":-1.1,"a22":0,"f":0,"g":0,"c":1.5})");
  const CliResult bad = run("verify " + bumped + " --epsilon 1 --lambda -4");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "R1331")) << bad.out;
  EXPECT_TRUE(contains(bad.out, "FAIL"));
}

TEST_F(Cli, Version) {
  const CliResult r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0.1.0"));
}

}  // namespace
