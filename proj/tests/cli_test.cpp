// Copyright 2026 The mdseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdseq_cli/pipelines.hpp"
#include "mdseq_cli/run_config.hpp"
#include "mdseq_cli/svg.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <sys/wait.h>

namespace mdseq::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("mdseq_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string config_error(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

TEST(RunConfig, ParsesEveryField) {
    const RunConfig c = parse_config(
        "# comment\n"
        "prime_limit = 2000000\n"
        "dyad=4,6\n"
        "sizes=0.1, 0.2\n"
        "offsets=1,3\n"
        "n_max=500  # trailing comment\n"
        "constant_C=6\n"
        "budget=100\n"
        "tolerance=0.05\n"
        "epsilon=1e-3\n"
        "output_dir=/tmp/x\n"
        "seed=9\n");
    EXPECT_EQ(c.prime_limit, 2'000'000u);
    EXPECT_EQ(c.dyad.first, 4u);
    EXPECT_EQ(c.dyad.second, 6u);
    EXPECT_EQ(c.sizes, (std::vector<double>{0.1, 0.2}));
    EXPECT_EQ(c.offsets, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(c.n_max, 500u);
    EXPECT_EQ(c.constant_C, 6.0);
    EXPECT_EQ(c.budget, 100u);
    EXPECT_EQ(c.tolerance, 0.05);
    EXPECT_EQ(c.epsilon, 1e-3);
    EXPECT_EQ(c.output_dir, fs::path("/tmp/x"));
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(config_fields().size(), 11u);
}

TEST(RunConfig, ErrorsNameLineAndField) {
    EXPECT_NE(config_error("seed=1\n\nbogus=3\n").find("line 3: unknown field 'bogus'"), std::string::npos);
    EXPECT_NE(config_error("n_max=12x\n").find("line 1: field 'n_max'"), std::string::npos);
    EXPECT_NE(config_error("seed=1\nseed=2\n").find("line 2: field 'seed' given twice"), std::string::npos);
    EXPECT_NE(config_error("budget\n").find("line 1: expected key=value"), std::string::npos);
    EXPECT_NE(config_error("dyad=6\n").find("field 'dyad'"), std::string::npos);
    EXPECT_NE(config_error("dyad=5,6\n").find("field 'dyad'"), std::string::npos);
    EXPECT_NE(config_error("epsilon=nan\n").find("field 'epsilon'"), std::string::npos);
}

TEST(RunConfig, ValidationRejectsNonPositive) {
    const fs::path dir = scratch("validate");
    for (const char* bad : {"budget=0", "epsilon=-1", "seed=0", "sizes=0.6", "offsets=0,1", "constant_C=0"}) {
        RunConfig c = parse_config(bad);
        c.output_dir = dir;
        EXPECT_THROW(validate(c), ConfigError) << bad;
    }
    RunConfig unwritable;
    unwritable.output_dir = "/proc/mdseq-cannot-exist";
    EXPECT_THROW(validate(unwritable), ConfigError);
}

TEST(RunConfig, FlagsOverrideFileAndEnvironmentIsFallback) {
    const fs::path dir = scratch("layers");
    const fs::path file = dir / "run.cfg";
    std::ofstream(file) << "seed=5\nbudget=200\noutput_dir=" << (dir / "from_file").string() << "\n";
    RunConfig c = resolve_config(file, {{"budget", "300"}});
    EXPECT_EQ(c.seed, 5u);
    EXPECT_EQ(c.budget, 300u);
    EXPECT_EQ(c.output_dir, dir / "from_file");
    EXPECT_THROW(resolve_config(file, {{"budget", "many"}}), ConfigError);

    ::setenv("MDSEQ_OUTPUT_DIR", (dir / "from_env").c_str(), 1);
    c = resolve_config({}, {});
    EXPECT_EQ(c.output_dir, dir / "from_env");
    EXPECT_TRUE(fs::is_directory(dir / "from_env"));
    c = resolve_config({}, {{"output_dir", (dir / "from_flag").string()}});
    EXPECT_EQ(c.output_dir, dir / "from_flag");
    ::unsetenv("MDSEQ_OUTPUT_DIR");
}

TEST(RunConfig, HashCoversComputationNotDestination) {
    RunConfig a, b;
    a.output_dir = "/one";
    b.output_dir = "/two";
    EXPECT_EQ(config_hash(a), config_hash(b));
    EXPECT_EQ(config_hash(a).size(), 16u);
    b.seed += 1;
    EXPECT_NE(config_hash(a), config_hash(b));
    // Round trip through the canonical text keeps the hash.
    EXPECT_EQ(config_hash(parse_config(canonical_text(a))), config_hash(a));
}

RunConfig small_config(const fs::path& out) {
    RunConfig c;
    c.prime_limit = 2'000'000;
    c.n_max = 300;
    c.budget = 2000;
    c.output_dir = out;
    return c;
}

TEST(Pipelines, ArtifactsAreByteIdenticalAcrossRuns) {
    const fs::path one = scratch("run_one"), two = scratch("run_two");
    for (const fs::path& out : {one, two}) {
        Workspace ws(small_config(out), MDSEQ_DATA_DIR);
        run("all", ws);
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(one)) {
        const fs::path other = two / entry.path().filename();
        ASSERT_TRUE(fs::exists(other)) << other;
        EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
        ++compared;
    }
    EXPECT_GE(compared, 20u);
}

TEST(Pipelines, EveryCsvHasHeaderAndHashTrailer) {
    const fs::path out = scratch("trailer");
    Workspace ws(small_config(out), MDSEQ_DATA_DIR);
    run("coverage", ws);
    run("discrepancy", ws);
    for (const fs::path& p : ws.written()) {
        const std::string text = slurp(p);
        EXPECT_EQ(text.find('\r'), std::string::npos);
        if (p.extension() == ".csv") {
            const auto lines = lines_of(text);
            ASSERT_GE(lines.size(), 2u);
            EXPECT_NE(lines.front()[0], '#');
            EXPECT_EQ(lines.back(), "# config_hash=" + ws.hash()) << p;
        } else {
            EXPECT_NE(text.find("config_hash=" + ws.hash()), std::string::npos) << p;
        }
    }
}

TEST(Pipelines, CoverageTableHasFourRows) {
    const fs::path out = scratch("coverage");
    Workspace ws(small_config(out), MDSEQ_DATA_DIR);
    run_coverage(ws);
    const auto lines = lines_of(slurp(out / "coverage.csv"));
    ASSERT_EQ(lines.size(), 1u + 4u + 1u);
    EXPECT_EQ(lines[0], "size,offset_j,measured_fraction,expected_published,analytic_uniform,sample_count");
    EXPECT_EQ(lines[1].rfind("0.10000000000000001,1,", 0), 0u);
    EXPECT_EQ(lines[4].rfind("0.33300000000000002,1,", 0), 0u);
    const auto wide = lines_of(slurp(out / "well_distributed.csv"));
    EXPECT_EQ(wide[0], "size,j1,j2,j3,j4,j5,expected_published,analytic_uniform");
    EXPECT_EQ(wide.size(), 6u);
}

TEST(Pipelines, EntropyCoinRow) {
    const fs::path out = scratch("entropy");
    Workspace ws(small_config(out), MDSEQ_DATA_DIR);
    run_entropy(ws);
    const auto lines = lines_of(slurp(out / "entropy.csv"));
    ASSERT_GE(lines.size(), 3u);
    ASSERT_EQ(lines[1].rfind("coin,", 0), 0u) << lines[1];
    const double coin = std::strtod(lines[1].c_str() + 5, nullptr);
    char printed[16];
    std::snprintf(printed, sizeof printed, "%.5f", coin);
    EXPECT_STREQ(printed, "0.30103");
    EXPECT_NE(lines[1].find(",true"), std::string::npos);
    bool pi_flagged = false;
    for (const auto& l : lines) {
        if (l.rfind("pi_digits,", 0) == 0) pi_flagged = l.ends_with(",false");
    }
    EXPECT_TRUE(pi_flagged);
}

TEST(Pipelines, GenerateAtFullScale) {
    const fs::path out = scratch("generate");
    RunConfig c = small_config(out);
    c.prime_limit = 16'000'000;
    Workspace ws(c, MDSEQ_DATA_DIR);
    run_generate(ws);
    std::size_t rows = 0;
    for (const auto& l : lines_of(slurp(out / "md.csv"))) rows += !l.empty() && l[0] != '#';
    EXPECT_EQ(rows - 1, 17'546u);
}

TEST(Pipelines, UnknownSubcommand) {
    Workspace ws(small_config(scratch("unknown")), MDSEQ_DATA_DIR);
    EXPECT_THROW(run("plot", ws), ConfigError);
}

TEST(Svg, DeterministicAndWellFormed) {
    Plot p;
    p.title = "t <x>";
    p.log_x = true;
    p.series.push_back({"s", {1, 10, 100}, {0.5, 0.25, 0.125}});
    p.series.push_back({"skip", {0, 1}, {1, 2}, SeriesStyle::points});
    const std::string a = render_svg(p, "note"), b = render_svg(p, "note");
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("t &lt;x&gt;"), std::string::npos);
    EXPECT_NE(a.find("<!-- note -->"), std::string::npos);
    EXPECT_TRUE(a.ends_with("</svg>\n"));
    p.series.push_back({"bad", {1}, {}});
    EXPECT_THROW(render_svg(p, ""), std::invalid_argument);
}

int run_tool(const std::string& args) {
    const std::string cmd = std::string(MDSEQ_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Tool, ExitCodes) {
    const fs::path dir = scratch("tool");
    const std::string out = " --output-dir " + (dir / "out").string();
    EXPECT_EQ(run_tool("entropy --prime-limit 100000" + out), 0);
    EXPECT_TRUE(fs::exists(dir / "out" / "entropy.csv"));
    EXPECT_EQ(run_tool("frobnicate" + out), 2);
    EXPECT_EQ(run_tool("entropy --budget zero" + out), 2);
    EXPECT_EQ(run_tool("entropy --epsilon -1" + out), 2);
    std::ofstream(dir / "bad.cfg") << "n_max=1\nwhat=2\n";
    EXPECT_EQ(run_tool("coverage --config " + (dir / "bad.cfg").string() + out), 2);
    EXPECT_EQ(run_tool("entropy --prime-limit 100000 --data-dir " + (dir / "missing").string() + out), 3);
}

}  // namespace
}  // namespace mdseq::cli
