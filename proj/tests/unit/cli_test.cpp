// Copyright 2026 The mixent Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Invocation {
    int status = -1;
    std::string out;
};

Invocation run(const std::string &args) {
    const std::string command = std::string(MIXENT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    Invocation r;
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::size_t lines(const std::string &s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

std::string first_line(const std::string &s) { return s.substr(0, s.find('\n')); }

TEST(Cli, VerifyPublished) {
    EXPECT_EQ(run("verify-published").status, 0);
    const Invocation printed = run("verify-published --as-printed");
    EXPECT_EQ(printed.status, 2);
    EXPECT_NE(printed.out.find("row 2"), std::string::npos);
}

TEST(Cli, CurvesRowCount) {
    const Invocation r = run("curves --fmin 0.26 --fmax 1.0 --points 100");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out), 101u);
    EXPECT_EQ(first_line(r.out), "F,E_formation,D_hash,D_recur_hash,D_macch_hash,KL_upper");
    const Invocation logged = run("curves --fmin 0.6 --points 5 --log");
    EXPECT_EQ(first_line(logged.out).substr(0, 19), "log10_F_minus_half,");
    EXPECT_EQ(logged.out.find('\r'), std::string::npos);
}

TEST(Cli, SearchWithoutSolution) {
    const Invocation r = run("search --n 2 --m 1 --t 1 --budget 1000000");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("no solution", 0), 0u);
}

TEST(Cli, SearchSolutionFormat) {
    const Invocation r = run("search --n 5 --m 1 --t 1 --budget 2000000 --seed 5");
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line, last;
    std::size_t gates = 0;
    while (std::getline(in, line)) {
        if (line.rfind("ops=", 0) == 0) {
            last = line;
            break;
        }
        ++gates;
    }
    ASSERT_FALSE(last.empty());
    EXPECT_EQ(last.rfind("ops=" + std::to_string(gates) + " bxors=", 0), 0u);
    EXPECT_NE(last.find("goodcon=1 badcon="), std::string::npos);
}

TEST(Cli, Recurrence) {
    const Invocation r = run("recurrence --F0 0.75 --variant macchiavello");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(first_line(r.out), "step,F,p_pass,fraction_remaining");
    EXPECT_GT(lines(r.out), 2u);
    EXPECT_EQ(run("recurrence --F0 0.4").status, 1);
    EXPECT_EQ(run("recurrence --F0 0.8 --variant other").status, 1);
}

TEST(Cli, HashSimIsReproducible) {
    const Invocation a = run("hash-sim --n 6 --F 0.9 --rounds 4 --seeds 3 --seed 11");
    const Invocation b = run("hash-sim --n 6 --F 0.9 --rounds 4 --seeds 3 --seed 11");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out), 1u + 3u * 5u);
    EXPECT_EQ(first_line(a.out), "seed,round,posterior_entropy,candidates_remaining,identified");
    EXPECT_NE(run("hash-sim --n 6 --F 0.9 --rounds 4 --seeds 3 --seed 12").out, a.out);
    EXPECT_EQ(run("hash-sim --n 3 --rounds 4").status, 1);
}

TEST(Cli, OutFileMatchesStdout) {
    const std::string path = ::testing::TempDir() + "mixent_cli_out.csv";
    const Invocation direct = run("direct-purify --p 0.5 --pairs 20000 --seed 3");
    EXPECT_EQ(run("direct-purify --p 0.5 --pairs 20000 --seed 3 --out " + path).status, 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream file;
    file << in.rdbuf();
    EXPECT_EQ(file.str(), direct.out);
    EXPECT_EQ(lines(direct.out), 2u);
}

TEST(Cli, VerifyCodeAndTwirl) {
    const Invocation code = run("verify-code --random-unitaries 5 --seed 2");
    EXPECT_EQ(code.status, 0);
    EXPECT_EQ(lines(code.out), 1u + 16u + 5u + 1u);
    EXPECT_EQ(code.out.find("fail"), std::string::npos);
    const Invocation twirl = run("twirl-check --samples 20");
    EXPECT_EQ(twirl.status, 0);
    EXPECT_EQ(twirl.out.find("fail"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("bogus").status, 1);
    EXPECT_EQ(run("curves --nope").status, 1);
    EXPECT_EQ(run("direct-purify --pairs 7").status, 1);
    const Invocation help = run("--help");
    EXPECT_EQ(help.status, 0);
    for (const char *sub : {"curves", "recurrence", "hash-sim", "search", "verify-published", "verify-code",
                            "twirl-check", "direct-purify"}) {
        EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
    }
}

}  // namespace
