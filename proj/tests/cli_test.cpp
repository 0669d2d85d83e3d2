// Copyright 2026 The signbase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace signbase::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(std::string const& text) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("signbase_cli_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  std::string const& path() const { return path_; }

 private:
  std::string path_;
};

report::json body_without_input(std::string const& text) {
  auto j = report::json::parse(text);
  j.erase("input");
  return j;
}

TEST(Cli, AnalyzeTwoVertexExample) {
  TempFile f("2\n1 1 +\n1 2 +\n2 1 -\n");
  auto const r = call({"analyze", f.path(), "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto const j = report::json::parse(r.out);
  EXPECT_EQ(j["schema"], "signbase/1");
  EXPECT_EQ(j["primitive"]["value"], true);
  EXPECT_EQ(j["nonpowerful"]["value"], true);
  EXPECT_EQ(j["bases"]["global"], 4);
  EXPECT_EQ(j["primitive"]["cycle_lengths"], report::json::array({1, 2}));
  EXPECT_FALSE(j.contains("timing"));
  auto const timed = report::json::parse(call({"analyze", f.path(), "--json", "--timing"}).out);
  EXPECT_TRUE(timed.contains("timing"));
}

TEST(Cli, ExitCodes) {
  TempFile c4("4\n1 2 +\n2 3 +\n3 4 +\n4 1 +\n");
  auto const np = call({"analyze", c4.path()});
  EXPECT_EQ(np.code, kNotPrimitive);
  EXPECT_NE(np.err.find("gcd of cycle lengths = 4"), std::string::npos);

  TempFile bad("2\n1 1 +\n1 3 +\n");
  auto const pe = call({"analyze", bad.path()});
  EXPECT_EQ(pe.code, kFailure);
  EXPECT_NE(pe.err.find("line 3"), std::string::npos);

  TempFile powerful("2\n1 1 -\n1 2 +\n2 1 +\n");
  EXPECT_EQ(call({"analyze", powerful.path()}).code, kPowerful);
  EXPECT_EQ(call({"analyze", powerful.path(), "--exp-only"}).code, kOk);

  TempFile dense("6\n" + [] {
    std::string s;
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) s += std::to_string(a) + " " + std::to_string(b) + " +\n";
    }
    return s;
  }());
  EXPECT_EQ(call({"analyze", dense.path(), "--max-cycles", "10"}).code, kLimit);

  EXPECT_EQ(call({"analyze", "/nonexistent/file"}).code, kFailure);
  EXPECT_EQ(call({"bogus"}).code, kUsage);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, ExpOnlyOmitsBases) {
  auto const r = call({"family", "--name", "d1", "--n", "6", "--exp-only", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto const j = report::json::parse(r.out);
  EXPECT_EQ(j["report"]["exponents"]["global"], 26);
  EXPECT_FALSE(j["report"].contains("bases"));
}

TEST(Cli, FamilyExamples) {
  auto const s21 = call({"family", "--name", "dki", "--n", "7", "--k", "2", "--i", "1",
                         "--preset", "same-sign", "--json"});
  ASSERT_EQ(s21.code, kOk) << s21.err;
  EXPECT_EQ(report::json::parse(s21.out)["report"]["bases"]["global"], 67);

  auto const q1 = call({"family", "--name", "b1", "--n", "8", "--preset", "q1", "--json"});
  ASSERT_EQ(q1.code, kOk) << q1.err;
  auto const ordered = report::json::parse(q1.out)["report"]["bases"]["ordered"];
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(ordered[k - 1], 2 * 64 - 8 * 8 + 4 + k);

  auto const l8 = call({"family", "--name", "script-l", "--n", "8"});
  EXPECT_EQ(l8.code, kUsage);
  EXPECT_NE(l8.err.find("requires odd n"), std::string::npos);
  EXPECT_EQ(call({"family", "--name", "zz", "--n", "8"}).code, kUsage);
  EXPECT_EQ(call({"family", "--name", "b1", "--n", "8", "--preset", "q1", "--solve", "5:-"})
                .code,
            kUsage);
}

TEST(Cli, NegateAndSolve) {
  auto const neg = call({"family", "--name", "d1", "--n", "6", "--negate", "2 1", "--json"});
  ASSERT_EQ(neg.code, kOk) << neg.err;
  auto const j = report::json::parse(neg.out);
  EXPECT_EQ(j["family"], "d1(n=6)/negate(2 1)");
  EXPECT_EQ(j["report"]["nonpowerful"]["value"], true);

  auto const sol = call({"family", "--name", "d1", "--n", "6", "--solve", "5:+,6:-", "--json"});
  ASSERT_EQ(sol.code, kOk) << sol.err;
  EXPECT_EQ(report::json::parse(sol.out)["report"]["bases"]["global"], 2 * 36 - 24 + 6 + 2);

  EXPECT_EQ(call({"family", "--name", "d1", "--n", "6", "--negate", "1 2"}).code, kUsage);
  EXPECT_EQ(call({"family", "--name", "d1", "--n", "6", "--solve", "5:x"}).code, kUsage);
}

TEST(Cli, FamilyOutputRoundTripsThroughAnalyze) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--name", "f5", "--n", "9", "--preset", "s5"},
        std::vector<std::string>{"--name", "dki", "--n", "9", "--k", "2", "--i", "3",
                                 "--preset", "ski"},
        std::vector<std::string>{"--name", "d2", "--n", "7", "--preset", "split"}}) {
    auto gen = args;
    gen.insert(gen.begin(), "family");
    auto edges = gen;
    edges.push_back("--no-analyze");
    auto const text = call(edges);
    ASSERT_EQ(text.code, kOk) << text.err;
    TempFile f(text.out);
    auto full = gen;
    full.push_back("--json");
    auto const fam = report::json::parse(call(full).out);
    auto const an = call({"analyze", f.path(), "--json"});
    ASSERT_EQ(an.code, kOk) << an.err;
    auto expect = fam["report"];
    expect.erase("input");
    EXPECT_EQ(body_without_input(an.out), expect);
  }
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  auto const a = call({"family", "--name", "f3", "--n", "10", "--preset", "s3", "--json"});
  auto const b = call({"family", "--name", "f3", "--n", "10", "--preset", "s3", "--json"});
  EXPECT_EQ(a.out, b.out);
  auto const v1 = call({"verify", "--suite", "exponents", "--n", "6..7", "--json"});
  auto const v2 = call({"verify", "--suite", "exponents", "--n", "6..7", "--json"});
  EXPECT_EQ(v1.code, kOk);
  EXPECT_EQ(v1.out, v2.out);
}

TEST(Cli, VerifyTextAndErrors) {
  auto const r = call({"verify", "--suite", "exponents", "--n", "6..6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("summary: "), std::string::npos);
  EXPECT_NE(r.out.find("PASS  exponents  "), std::string::npos);
  EXPECT_EQ(call({"verify", "--suite", "exponents", "--n", "9..6"}).code, kUsage);
  EXPECT_EQ(call({"verify", "--suite", "gaps", "--n", "8"}).code, kUsage);
  EXPECT_EQ(call({"verify", "--suite", "everything"}).code, kUsage);
  EXPECT_EQ(call({"verify"}).code, kUsage);
}

}  // namespace
}  // namespace signbase::cli
