#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("FLOORQ_CACHE_DIR=/tmp/floorq_cli_test_cache ") + FLOORQ_CLI_PATH + " " + args +
                          " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Invariant) {
  auto r = run("invariant --polygon d:3 --genus 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q + 10 + q^-1\n");
  r = run("--format json invariant -p abn:3,0,1 -g 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\":{\"0\":\"1\"}"), std::string::npos) << r.out;
}

TEST(Cli, Descendant) {
  auto r = run("descendant --polygon d:3 --s 2 --pairing pairs:3-4,6-7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q + 6 + q^-1\n");
  r = run("--format csv descendant --polygon d:4 --s 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0,24\n"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("invariant --polygon nonsense --genus 0").code, 2);
  EXPECT_EQ(run("descendant --polygon d:3 --s 1 --pairing pairs:1-3").code, 2);
  EXPECT_EQ(run("coeffs --i 1 --grid a=3..1,b=2,n=1,s=0").code, 2);
  EXPECT_EQ(run("coeffs --i 1 --grid a=0,b=0,n=0,s=0").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("--format xml invariant -p d:3 -g 0").code, 2);
}

TEST(Cli, CoeffsCsv) {
  auto r = run("--format csv coeffs --i 1 --grid a=3,b=2,n=1,s=0..1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "i,a,b,n,s,value,source\n"
            "1,3,2,1,0,15,enumeration\n1,3,2,1,0,15,closed_form\n"
            "1,3,2,1,1,13,enumeration\n1,3,2,1,1,13,closed_form\n");
}

TEST(Cli, FitAndVerify) {
  auto r = run("fit --i 1 --g 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"ok\": true"), std::string::npos) << r.out;
  r = run("verify --suite identities");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS identities"), std::string::npos);
  r = run("verify --suite paper-examples --golden-dir /nonexistent");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, TemplatesCappingCache) {
  auto r = run("templates --max-genus 0 --max-codeg 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "genus,codegree,count\n0,0,1\n0,1,2\n");
  r = run("capping --a 4 --n 1 --max-codeg 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"codegree\":2"), std::string::npos) << r.out;
  r = run("cache --clear");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("/tmp/floorq_cli_test_cache"), std::string::npos);
}
