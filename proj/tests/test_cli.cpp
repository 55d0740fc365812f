#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace osborn;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return support::data_path(name); }

}  // namespace

TEST(Cli, CheckHolds) {
  const Outcome r = run({"check", data("z4.tbl"), "--identity", "OS2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "holds\n");
}

TEST(Cli, StrictFailureExitsOne) {
  const Outcome r = run({"--strict", "check", data("nonosborn5.tbl"), "--identity", "OS2"});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.out.find("fails at ("), std::string::npos);
  EXPECT_EQ(run({"check", data("nonosborn5.tbl"), "--identity", "OS2"}).code, cli::kOk);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"check", data("missing.tbl"), "--identity", "OS2"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", data("z4.tbl"), "--identity", "NOPE"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "--order", "8"}).code, cli::kUsage);
}

TEST(Cli, JsonFlagAnywhere) {
  const Outcome a = run({"--json", "check", data("z4.tbl"), "--identity", "COMM"});
  const Outcome b = run({"check", data("z4.tbl"), "--identity", "COMM", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(Cli, CipherExamples) {
  EXPECT_EQ(run({"crypto", "encrypt", "--scheme", "cip", "--table", data("z26.tbl"), "--key", "3"}, "7").out, "10\n");
  EXPECT_EQ(run({"crypto", "decrypt", "--scheme", "osborn", "--table", data("z26.tbl"), "--key", "3"}, "10").out,
            "7\n");
  EXPECT_EQ(run({"crypto", "encrypt", "--scheme", "cip", "--table", data("z26.tbl"), "--key", "3", "--alphabet",
                 "ABCDEFGHIJKLMNOPQRSTUVWXYZ"},
                "HELLO")
                .out,
            "KHOOR\n");
  const Outcome bad = run({"crypto", "encrypt", "--scheme", "osborn", "--table", data("nonosborn5.tbl"), "--key", "1"}, "0");
  EXPECT_EQ(bad.code, cli::kUsage);
}

TEST(Cli, KeyStreamWarnsOnReuse) {
  const Outcome r = run({"crypto", "encrypt", "--scheme", "osborn", "--table", data("cc6.tbl"), "--key", "3", "--stream"},
                    "0 0 0 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("keys repeat"), std::string::npos);
  const Outcome back = run({"crypto", "decrypt", "--scheme", "osborn", "--table", data("cc6.tbl"), "--key", "3",
                        "--stream"},
                       r.out);
  EXPECT_EQ(back.out, "0 0 0 0\n");
}

TEST(Cli, EnumerateAndVerifyCatalog) {
  const auto dir = std::filesystem::temp_directory_path() / "osborn_cli_order5";
  std::filesystem::remove_all(dir);
  const Outcome e = run({"enumerate", "--order", "5", "--out", dir.string(), "--jobs", "2"});
  ASSERT_EQ(e.code, 0) << e.err;
  const Outcome v = run({"verify", "--catalog", dir.string(), "--statement", "THM_1_5"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("56 tested, 0 failures"), std::string::npos);
  const Outcome v2 = run({"verify", "--catalog", dir.string(), "--statement", "THM_1_5", "--jobs", "3"});
  EXPECT_EQ(v.out, v2.out);
  const Outcome c = run({"cycles", "--catalog", dir.string()});
  EXPECT_NE(c.out.find("     5       4         24"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"props", data("moufang12.tbl")}).code, 0);
  const Outcome m = run({"--json", "multgroup", data("moufang12.tbl")});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(Json::parse(m.out)["mult_order"].get<std::size_t>(), 2592u);
  const Outcome f = run({"find", "--max", "8", "--want", "OS2&!LSIP"});
  EXPECT_EQ(f.code, 0);
  const LoopTable cc6 = as_loop(read_table_file(data("cc6.tbl")));
  EXPECT_EQ(f.out, "# digest " + hex_digest(digest(cc6)) + "\n" + serialize(cc6));
  EXPECT_EQ(run({"--strict", "isotopes", data("klein.tbl"), "--check", "WIP"}).code, 0);
  EXPECT_EQ(run({"--strict", "verify", data("cc6.tbl"), "--statement", "LEM_2_1_5"}).code, 0);
  const Outcome cyc = run({"cycles", data("cc6.tbl")});
  EXPECT_EQ(cyc.out, "(0)(1 2)(3 4 5)\nlengths 1 2 3\n");
}
