#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "output.hpp"

namespace genuskit::cli {
namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " GENUSKIT_CLI_PATH " " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GENUSKIT_DATA_DIR) + "/potentials/" + name; }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

TEST(Cli, GaussianRk) {
  const Invocation r = run("rk --potential " + data("gaussian.json") + " --order 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "r0 = T/2\nr1 = 0\nr2 = 0\nr3 = 0\n");
}

TEST(Cli, PainleveDefault) {
  const Invocation r = run("painleve --m 3 --rc 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "u'''' + 10 u u'' + 5 (u')^2 + 10 u^3 = 10 x");
}

TEST(Cli, CountCsvRows) {
  const Invocation r = run("count --valences 2,4 --max-vertices 4 --genus-max 2 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(count_lines(r.out), 76);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n2,n4,k,kappa");
  EXPECT_NE(r.out.find("4,4,2,97661583360\n"), std::string::npos);
}

TEST(Cli, BigKappaIsAStringInJson) {
  const Invocation r = run("count --valences 2,4,6 --max-vertices 3 --genus-max 4 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "genuskit.count/1");
  bool found = false;
  for (const auto& row : j.at("rows")) {
    if (row.at("n") == nlohmann::json({3, 3, 3}) && row.at("k") == 4) {
      EXPECT_TRUE(row.at("kappa").is_string());
      EXPECT_EQ(row.at("kappa"), "92591402036428800000");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, Deterministic) {
  const std::string args = "free-energy --potential " + data("quartic.json") + " --format json";
  const Invocation a = run(args);
  const Invocation b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const std::string args : {"phase --model quartic --g -3,1 --format json",
                                 "painleve --m 3 --tail-terms 3 --format json",
                                 "rk --couplings 2=1,4=2/3 --order 2 --format json"}) {
    const Invocation r = run(args);
    ASSERT_EQ(r.status, 0) << args;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "genuskit_cli_test.csv";
  const Invocation r = run("count --valences 4 --max-vertices 2 --genus-max 1 --format csv -o " + path.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("count --valences 4 --max-vertices 2 --genus-max 1 --format csv").out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("--bogus").status, 2);
  EXPECT_EQ(run("rk").status, 5);
  EXPECT_EQ(run("rk --couplings 2=1/0").status, 3);
  EXPECT_EQ(run("rk --couplings 2=1 --potential " + data("gaussian.json")).status, 4);
  EXPECT_EQ(run("rk --potential /nonexistent/p.json").status, 8);
  EXPECT_EQ(run("count --valences 3").status, 5);
  EXPECT_EQ(run("phase --model quartic --g 1,2,3").status, 4);
  EXPECT_EQ(run("phase --model quartic --g -3,1 --endpoint 1").status, 5);
  EXPECT_EQ(run("count --valences 4 -o /nonexistent/dir/out.csv").status, 8);
  EXPECT_EQ(run("painleve --m 3", "GENUSKIT_PRECISION=abc").status, 3);
}

TEST(Output, CsvQuotingAndEmptyTable) {
  const Table t{{"a", "b"}, {{"1,2", "say \"hi\""}}};
  EXPECT_EQ(render_csv(t), "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n");
  EXPECT_EQ(render_csv(Table{{"a", "b"}, {}}), "a,b\n");
  EXPECT_THROW(parse_format("xml"), std::exception);
}

TEST(Output, InlineCouplings) {
  const Potential p = parse_inline_couplings("2=1,4=2/3");
  EXPECT_EQ(*p.numeric(1), 1);
  EXPECT_EQ(*p.numeric(2), ratio(2, 3));
  EXPECT_THROW(parse_inline_couplings("2"), std::exception);
}

TEST(Output, PotentialFiles) {
  const Potential bmp = load_potential_file(data("bmp.json"));
  EXPECT_EQ(*bmp.numeric(3), ratio(1, 60));
  EXPECT_THROW(load_potential_file(data("missing.json")), IoError);
}

}  // namespace
}  // namespace genuskit::cli
