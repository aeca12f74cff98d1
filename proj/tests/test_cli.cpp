/*
   Copyright 2026 The sqdisc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli_runner.hpp"

#include <gtest/gtest.h>

#include <string>

using sqdisc::testing::read_file;
using sqdisc::testing::run_cli;
using sqdisc::testing::ScratchDir;

TEST(Cli, Disc) {
    auto r = run_cli("disc --poly 1,1,1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "-3\nsquare: false\n");
    r = run_cli("disc --poly 1,1,1,1,1,1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1296\nsquare: true\n");
}

TEST(Cli, Resultant) {
    const auto r = run_cli("resultant --f -2,1 --g -3,1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "-1\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("disc --poly 1,1 --bogus").exit_code, 2);
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("disc --poly 1,x").exit_code, 2);
    EXPECT_EQ(run_cli("render --set 0 --max-degree 3 --out /dev/null").exit_code, 2);
    EXPECT_EQ(run_cli("approx --poly 1,2 --root-index 0 --eps 0.1 --set pm1 --out /dev/null").exit_code, 2);
    EXPECT_EQ(run_cli("approx --poly 1,1,-1 --root-index 5 --eps 0.1 --out /dev/null").exit_code, 2);
    EXPECT_EQ(run_cli("approx --poly 1,1,-1 --root-index 0 --eps 0.1 --case v --out /dev/null").exit_code, 2);
    EXPECT_EQ(run_cli("verify --cert /nonexistent/cert.txt").exit_code, 2);
}

TEST(Cli, ComputationErrors) {
    // {1,2} supports no construction.
    EXPECT_EQ(run_cli("approx --poly 1,2,1 --root-index 0 --eps 0.1 --set 1,2 --out /dev/null").exit_code, 3);
}

TEST(Cli, ApproxVerifyRoundTripAndTamper) {
    ScratchDir dir("cli_approx");
    const std::string cert = dir.path("c.txt");
    const auto a = run_cli("approx --poly 1,-1,-1,1,1,-1,1 --root-index 1 --eps 1e-2 --set pm1 --out " + cert);
    ASSERT_EQ(a.exit_code, 0) << a.err;
    const auto v = run_cli("verify --cert " + cert);
    EXPECT_EQ(v.exit_code, 0) << v.out;
    EXPECT_NE(v.out.find("result: accepted"), std::string::npos);

    std::string text = read_file(cert);
    const auto at = text.find("\nf_k = ");
    ASSERT_NE(at, std::string::npos);
    const auto first = at + 7;
    text.replace(first, 1, text[first] == '-' ? "" : "-");
    const std::string bad = dir.path("bad.txt");
    sqdisc::detail::write_file(bad, text);
    const auto t = run_cli("verify --cert " + bad);
    EXPECT_EQ(t.exit_code, 1);
    EXPECT_NE(t.out.find("result: rejected"), std::string::npos);

    sqdisc::detail::write_file(bad, "garbage\n");
    EXPECT_EQ(run_cli("verify --cert " + bad).exit_code, 1);
}

TEST(Cli, ApproxInvertsOuterRoots) {
    ScratchDir dir("cli_invert");
    const std::string cert = dir.path("c.txt");
    const auto a = run_cli("approx --poly 1,1,-1 --root-index 1 --eps 1e-2 --out " + cert);
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_NE(a.out.find("inverted = true"), std::string::npos);
    EXPECT_EQ(run_cli("verify --cert " + cert).exit_code, 0);
}

TEST(Cli, Determinism) {
    ScratchDir dir("cli_det");
    const std::string args = "approx --poly 1,1,-1,1,-1,1 --root-index 2 --eps 1e-3 --out ";
    const auto a = run_cli(args + dir.path("a.txt"));
    const auto b = run_cli(args + dir.path("a.txt"));
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const std::string first = read_file(dir.path("a.txt"));
    run_cli(args + dir.path("b.txt"));
    std::string second = read_file(dir.path("b.txt"));
    // Only the echoed output path differs.
    const auto pos = second.find("b.txt");
    ASSERT_NE(pos, std::string::npos);
    second.replace(pos, 5, "a.txt");
    EXPECT_EQ(first, second);

    const std::string render = "render --set zpm1 --max-degree 6 --width 96 --height 80 --center 0.25,0.5 --half-width 1.5";
    const auto r1 = run_cli(render + " --threads 1 --out " + dir.path("1.ppm") + " --csv " + dir.path("1.csv"));
    const auto r2 = run_cli(render + " --threads 4 --out " + dir.path("2.ppm") + " --csv " + dir.path("2.csv"));
    ASSERT_EQ(r1.exit_code, 0) << r1.err;
    ASSERT_EQ(r2.exit_code, 0) << r2.err;
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_EQ(read_file(dir.path("1.ppm")), read_file(dir.path("2.ppm")));
    EXPECT_EQ(read_file(dir.path("1.csv")), read_file(dir.path("2.csv")));
    EXPECT_EQ(read_file(dir.path("1.ppm")).rfind("P6\n96 80\n255\n", 0), 0u);
}

TEST(Cli, ConfigIsEchoed) {
    const auto r = run_cli("disc --poly 1,0,1");
    EXPECT_NE(r.err.find("# config: subcommand = disc"), std::string::npos);
    EXPECT_NE(r.err.find("# config: poly = 1,0,1"), std::string::npos);
}

TEST(Cli, QuickSelftest) {
    const auto r = run_cli("selftest --quick");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}
