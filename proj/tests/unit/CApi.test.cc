//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/CApi.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedchord.h"

#include <cmath>
#include <numbers>
#include <string>
#include <gtest/gtest.h>
#include <json.hpp>

namespace
{
//---------------------------------------------------------------------------//
char const shell_json[] = R"({"solid": {"difference": [
    {"sphere": {"center": [0, 0, 0], "radius": 1}},
    {"sphere": {"center": [0, 0, 0], "radius": 0.5}}]}})";

char const field_json[] = R"({
    "hull": {"sphere": {"center": [0, 0, 0], "radius": 1}},
    "regions": [{"solid": {"sphere": {"center": [0, 0, 0], "radius": 1}}, "rho": 3}]})";

TEST(CApiTest, status_names)
{
    EXPECT_STREQ("ok", sc_status_name(SC_OK));
    EXPECT_STRNE("unknown", sc_status_name(SC_UNBOUNDED_WEIGHT));
    EXPECT_STREQ("unknown", sc_status_name(static_cast<sc_status>(99)));
    EXPECT_STRNE("", sc_version());
    EXPECT_EQ(9u, sc_command_count());
    EXPECT_STREQ("describe", sc_command_name(0));
    EXPECT_EQ(nullptr, sc_command_name(9));
}

TEST(CApiTest, body_lifecycle)
{
    sc_body* body = nullptr;
    ASSERT_EQ(SC_OK, sc_body_parse(shell_json, &body));
    sc_metrics m;
    ASSERT_EQ(SC_OK, sc_body_metrics(body, &m));
    EXPECT_NEAR(7 * std::numbers::pi / 6, m.volume, 1e-14);
    EXPECT_EQ(1, m.has_hull_surface);
    EXPECT_EQ(0, m.convex);

    double origin[3]{0, 0, -3}, dir[3]{0, 0, 2};
    double iv[4];
    std::size_t count = 0;
    ASSERT_EQ(SC_OK, sc_body_intersect(body, origin, dir, iv, 2, &count));
    EXPECT_EQ(2u, count);
    EXPECT_NEAR(2.0, iv[0], 1e-12);
    EXPECT_NEAR(4.0, iv[3], 1e-12);
    // Truncated output still reports the full count
    ASSERT_EQ(SC_OK, sc_body_intersect(body, origin, dir, iv, 1, &count));
    EXPECT_EQ(2u, count);

    double zero[3]{0, 0, 0};
    EXPECT_EQ(SC_INVALID_ARGUMENT, sc_body_intersect(body, origin, zero, iv, 2, &count));
    sc_body_free(body);
    sc_body_free(nullptr);
}

TEST(CApiTest, errors_set_message)
{
    sc_body* body = reinterpret_cast<sc_body*>(0x1);
    EXPECT_EQ(SC_CONFIG, sc_body_parse("{\"solid\": {\"cone\": {}}}", &body));
    EXPECT_EQ(nullptr, body);
    EXPECT_NE(std::string::npos, std::string(sc_last_error()).find("cone"));
    EXPECT_EQ(SC_IO, sc_body_load("/nonexistent/body.json", &body));
    EXPECT_EQ(SC_INVALID_ARGUMENT, sc_body_parse(nullptr, &body));

    sc_body* two = nullptr;
    ASSERT_EQ(SC_OK,
              sc_body_parse(R"({"solid": {"union": [
                  {"sphere": {"center": [-0.5, 0, 0], "radius": 1}},
                  {"sphere": {"center": [0.5, 0, 0], "radius": 1}}]}})",
                            &two));
    sc_metrics m;
    EXPECT_EQ(SC_UNSUPPORTED_METRICS, sc_body_metrics(two, &m));

    sc_run_config cfg;
    sc_run_config_init(&cfg);
    cfg.samples = 100;
    sc_result* r = nullptr;
    EXPECT_EQ(SC_UNSUPPORTED_METRICS, sc_run("identities", two, nullptr, &cfg, &r));
    EXPECT_EQ(nullptr, r);
    EXPECT_EQ(SC_CONFIG, sc_run("frobnicate", two, nullptr, &cfg, &r));
    cfg.bins = 4;
    EXPECT_EQ(SC_CONFIG, sc_run("sample-chords", two, nullptr, &cfg, &r));
    sc_body_free(two);
}

TEST(CApiTest, run_describe_and_chords)
{
    sc_body* body = nullptr;
    ASSERT_EQ(SC_OK, sc_body_parse(shell_json, &body));
    sc_run_config cfg;
    sc_run_config_init(&cfg);
    EXPECT_EQ(20240917u, cfg.seed);
    cfg.samples = 20000;
    cfg.bins = 32;

    sc_result* r = nullptr;
    ASSERT_EQ(SC_OK, sc_run("describe", body, nullptr, &cfg, &r));
    EXPECT_EQ(0u, std::string(sc_result_text(r)).find("V=3.66519\nS=15.70796\n"));
    EXPECT_EQ(1, sc_result_passed(r));
    sc_result_free(r);

    ASSERT_EQ(SC_OK, sc_run("sample-chords", body, nullptr, &cfg, &r));
    auto j = nlohmann::json::parse(sc_result_json(r));
    EXPECT_EQ("sample-chords", j["command"]);
    EXPECT_EQ(20000, j["results"]["lines_tried"]);
    EXPECT_FALSE(j.contains("workers"));
    ASSERT_EQ(6u, sc_result_table_count(r));
    EXPECT_STREQ("mu_signed", sc_result_table_name(r, 0));
    EXPECT_EQ(0u, std::string(sc_result_table_csv(r, 0)).find("bin_lo,bin_hi,density"));
    EXPECT_EQ(nullptr, sc_result_table_csv(r, 6));
    std::string const first = sc_result_json(r);
    sc_result_free(r);

    cfg.workers = 4;
    ASSERT_EQ(SC_OK, sc_run("sample-chords", body, nullptr, &cfg, &r));
    EXPECT_EQ(first, sc_result_json(r));
    sc_result_free(r);
    sc_body_free(body);
}

TEST(CApiTest, field)
{
    sc_field* f = nullptr;
    ASSERT_EQ(SC_OK, sc_field_parse(field_json, &f));
    double p[3]{-1, 0, 0}, q[3]{1, 0, 0}, w = 0;
    ASSERT_EQ(SC_OK, sc_field_optical_length(f, p, q, &w));
    EXPECT_NEAR(6.0, w, 1e-12);

    sc_run_config cfg;
    sc_run_config_init(&cfg);
    cfg.samples = 10000;
    cfg.aux_samples = 100000;
    sc_result* r = nullptr;
    EXPECT_EQ(SC_CONFIG, sc_run("optical", nullptr, nullptr, &cfg, &r));
    ASSERT_EQ(SC_OK, sc_run("optical", nullptr, f, &cfg, &r));
    auto j = nlohmann::json::parse(sc_result_json(r));
    EXPECT_TRUE(j["results"].contains("G"));
    sc_result_free(r);
    sc_field_free(f);
}

TEST(CApiTest, config_strings)
{
    sc_body* body = nullptr;
    ASSERT_EQ(SC_OK, sc_body_parse(shell_json, &body));
    sc_run_config cfg;
    sc_run_config_init(&cfg);
    cfg.samples = 5000;
    cfg.bins = 32;
    cfg.phi = "pow:2";
    cfg.methods = "radii,pairs";
    sc_result* r = nullptr;
    ASSERT_EQ(SC_OK, sc_run("dirac", body, nullptr, &cfg, &r));
    auto j = nlohmann::json::parse(sc_result_json(r));
    EXPECT_EQ(2u, j["results"]["estimates"].size());
    sc_result_free(r);

    cfg.phi = "exp:1";
    cfg.methods = "pairs";
    EXPECT_EQ(SC_UNBOUNDED_WEIGHT, sc_run("dirac", body, nullptr, &cfg, &r));
    cfg.methods = "";
    EXPECT_EQ(SC_CONFIG, sc_run("dirac", body, nullptr, &cfg, &r));
    cfg.methods = nullptr;
    cfg.ell = "bogus";
    EXPECT_EQ(SC_CONFIG, sc_run("dirac", body, nullptr, &cfg, &r));
    sc_body_free(body);
}

//---------------------------------------------------------------------------//
}  // namespace
