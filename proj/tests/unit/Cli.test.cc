//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/Cli.test.cc
//! \brief End-to-end checks of the command-line tool
//---------------------------------------------------------------------------//
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <gtest/gtest.h>
#include <json.hpp>

namespace
{
//---------------------------------------------------------------------------//
struct Output
{
    int status{-1};
    std::string out;
};

Output run_cli(std::string const& args)
{
    std::string const cmd = std::string(SIGNEDCHORD_CLI) + " " + args + " 2>/dev/null";
    Output result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, n);
    int const status = pclose(pipe);
    result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data(char const* name)
{
    return std::string(SIGNEDCHORD_DATA_DIR) + "/" + name;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

TEST(CliTest, describe_sphere)
{
    auto r = run_cli("describe --body " + data("sphere.json"));
    EXPECT_EQ(0, r.status);
    EXPECT_NE(std::string::npos, r.out.find("V=4.18879\n"));
    EXPECT_NE(std::string::npos, r.out.find("S=12.56637\n"));
    EXPECT_NE(std::string::npos, r.out.find("<l>_Cauchy=1.33333\n"));
}

TEST(CliTest, exit_codes)
{
    EXPECT_EQ(2, run_cli("describe --body " + data("sphere.json") + " --frobnicate").status);
    EXPECT_EQ(2, run_cli("").status);
    EXPECT_EQ(2, run_cli("describe --body /nonexistent.json").status);
    EXPECT_EQ(2, run_cli("sample-chords --body " + data("sphere.json") + " --bins 4").status);
    EXPECT_EQ(2, run_cli("sample-chords --body " + data("sphere.json") + " --streams 1").status);
    EXPECT_EQ(2, run_cli("identities --samples 100 --body " + data("dumbbell.json")).status);
    EXPECT_EQ(0, run_cli("--help").status);
}

TEST(CliTest, failed_check_exits_one)
{
    // Metrics that contradict the geometry make the volume check fail
    auto const tmp = std::filesystem::temp_directory_path() / "signedchord_bad_metrics.json";
    std::ofstream(tmp) << R"({"solid": {"sphere": {"center": [0,0,0], "radius": 1}},
                              "metrics": {"volume": 5, "surface": 12.566370614359172}})";
    EXPECT_EQ(1, run_cli("describe --samples 100000 --body " + tmp.string()).status);
    std::filesystem::remove(tmp);
}

TEST(CliTest, json_report_and_csv)
{
    auto const dir = std::filesystem::temp_directory_path() / "signedchord_cli_csv";
    std::filesystem::remove_all(dir);
    auto r = run_cli("sample-radii --samples 20000 --bins 16 --body " + data("shell.json")
                     + " --csv-dir " + dir.string());
    ASSERT_EQ(0, r.status);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ("sample-radii", j["command"]);
    EXPECT_EQ(20240917, j["seed"]);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(std::filesystem::exists(dir / "iota_signed.csv"));
    std::filesystem::remove_all(dir);
}

TEST(CliTest, byte_reproducible_across_workers)
{
    auto const base = std::filesystem::temp_directory_path() / "signedchord_cli_repro";
    std::filesystem::remove_all(base);
    std::string const common = "sample-chords --samples 50000 --bins 32 --seed 3 --body "
                               + data("shell.json");
    std::vector<std::string> jsons;
    for (char const* tag : {"a", "b", "c"})
    {
        std::string const workers = std::string(tag) == "c" ? "4" : "1";
        auto r = run_cli(common + " --workers " + workers + " --csv-dir "
                         + (base / tag).string());
        ASSERT_EQ(0, r.status);
        jsons.push_back(r.out);
    }
    EXPECT_EQ(jsons[0], jsons[1]);
    EXPECT_EQ(jsons[0], jsons[2]);
    for (auto const& entry : std::filesystem::directory_iterator(base / "a"))
    {
        auto const name = entry.path().filename();
        EXPECT_EQ(slurp(entry.path()), slurp(base / "b" / name)) << name;
        EXPECT_EQ(slurp(entry.path()), slurp(base / "c" / name)) << name;
    }
    auto other = run_cli("sample-chords --samples 50000 --bins 32 --seed 4 --body "
                         + data("shell.json"));
    EXPECT_NE(jsons[0], other.out);
    std::filesystem::remove_all(base);
}

//---------------------------------------------------------------------------//
}  // namespace
