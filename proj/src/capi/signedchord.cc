//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file capi/signedchord.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedchord.h"

#include <cmath>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "signedchord/Error.hh"
#include "signedchord/app/Commands.hh"
#include "signedchord/geometry/BodyIO.hh"

struct sc_body
{
    signedchord::Body body;
};

struct sc_field
{
    signedchord::DensityField field;
};

struct sc_result
{
    std::string json;
    signedchord::RunResult run;
};

namespace
{
using signedchord::Error;
using signedchord::ErrorCode;

thread_local std::string g_last_error;

sc_status fail(sc_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

sc_status to_status(ErrorCode code)
{
    return static_cast<sc_status>(static_cast<int>(code));
}

//! Run a callable, translating exceptions into status codes
template<class F>
sc_status guarded(F&& f)
{
    try
    {
        f();
        return SC_OK;
    }
    catch (Error const& e)
    {
        return fail(to_status(e.code()), e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(SC_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(SC_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(SC_INTERNAL, "unknown exception");
    }
}

std::vector<std::string> split_list(char const* text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
    {
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

signedchord::RunOptions to_options(sc_run_config const& c)
{
    signedchord::RunOptions o;
    o.seed = c.seed;
    o.samples = c.samples;
    o.bins = c.bins;
    if (c.has_range)
    {
        o.range_lo = c.range_lo;
        o.range_hi = c.range_hi;
    }
    o.streams = c.streams;
    o.workers = c.workers;
    if (c.phi)
        o.phi = c.phi;
    if (c.methods)
    {
        o.methods = split_list(c.methods);
        if (o.methods.empty())
            throw Error(ErrorCode::config, "method list is empty");
    }
    if (c.ell)
        o.ell = c.ell;
    if (c.mfp_count)
    {
        if (!c.mfp)
            throw Error(ErrorCode::invalid_argument, "mfp pointer is null");
        o.mfp.assign(c.mfp, c.mfp + c.mfp_count);
    }
    o.window = c.window;
    if (c.slope)
        o.slope = c.slope;
    o.compare = c.compare != 0;
    o.aux_samples = c.aux_samples;
    o.nsigma = c.nsigma;
    return o;
}

#define SC_REQUIRE(COND, WHAT) \
    if (!(COND))               \
    return fail(SC_INVALID_ARGUMENT, WHAT)

}  // namespace

extern "C" {

//---------------------------------------------------------------------------//
char const* sc_version(void)
{
    return SIGNEDCHORD_VERSION;
}

char const* sc_status_name(sc_status status)
{
    if (status == SC_OK)
        return "ok";
    if (status < SC_INVALID_ARGUMENT || status > SC_INTERNAL)
        return "unknown";
    return signedchord::to_cstring(static_cast<ErrorCode>(status));
}

char const* sc_last_error(void)
{
    return g_last_error.c_str();
}

size_t sc_command_count(void)
{
    return signedchord::command_names().size();
}

char const* sc_command_name(size_t index)
{
    auto const& names = signedchord::command_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

//---------------------------------------------------------------------------//
sc_status sc_body_load(char const* path, sc_body** out)
{
    SC_REQUIRE(path && out, "null argument to sc_body_load");
    *out = nullptr;
    return guarded([&] { *out = new sc_body{signedchord::load_body(path)}; });
}

sc_status sc_body_parse(char const* json_text, sc_body** out)
{
    SC_REQUIRE(json_text && out, "null argument to sc_body_parse");
    *out = nullptr;
    return guarded(
        [&] { *out = new sc_body{signedchord::body_from_string(json_text)}; });
}

void sc_body_free(sc_body* body)
{
    delete body;
}

sc_status sc_body_metrics(sc_body const* body, sc_metrics* out)
{
    SC_REQUIRE(body && out, "null argument to sc_body_metrics");
    return guarded([&] {
        auto const m = body->body.metrics();
        out->volume = m.volume;
        out->surface = m.surface;
        out->has_hull_surface = m.hull_surface.has_value();
        out->hull_surface = m.hull_surface.value_or(
            std::numeric_limits<double>::quiet_NaN());
        out->bounding_center[0] = m.bounding_center.x;
        out->bounding_center[1] = m.bounding_center.y;
        out->bounding_center[2] = m.bounding_center.z;
        out->bounding_radius = m.bounding_radius;
        out->mean_chord = m.mean_chord();
        out->convex = body->body.convex();
    });
}

sc_status sc_body_intersect(sc_body const* body,
                            double const origin[3],
                            double const direction[3],
                            double* intervals,
                            size_t capacity,
                            size_t* count)
{
    SC_REQUIRE(body && origin && direction && count,
               "null argument to sc_body_intersect");
    SC_REQUIRE(intervals || capacity == 0, "null interval buffer");
    return guarded([&] {
        signedchord::Vec3 d{direction[0], direction[1], direction[2]};
        double const n = norm(d);
        if (!(n > 0) || !std::isfinite(n))
            throw Error(ErrorCode::invalid_argument, "direction must be nonzero");
        signedchord::Line line{{origin[0], origin[1], origin[2]}, d / n};
        auto const iv = body->body.intersect(line);
        *count = iv.size();
        for (size_t i = 0; i < iv.size() && i < capacity; ++i)
        {
            intervals[2 * i] = iv[i].lo;
            intervals[2 * i + 1] = iv[i].hi;
        }
    });
}

//---------------------------------------------------------------------------//
sc_status sc_field_load(char const* path, sc_field** out)
{
    SC_REQUIRE(path && out, "null argument to sc_field_load");
    *out = nullptr;
    return guarded([&] { *out = new sc_field{signedchord::load_field(path)}; });
}

sc_status sc_field_parse(char const* json_text, sc_field** out)
{
    SC_REQUIRE(json_text && out, "null argument to sc_field_parse");
    *out = nullptr;
    return guarded(
        [&] { *out = new sc_field{signedchord::field_from_string(json_text)}; });
}

void sc_field_free(sc_field* field)
{
    delete field;
}

sc_status sc_field_optical_length(sc_field const* field,
                                  double const p[3],
                                  double const q[3],
                                  double* out)
{
    SC_REQUIRE(field && p && q && out, "null argument to sc_field_optical_length");
    return guarded([&] {
        *out = field->field.optical_length({p[0], p[1], p[2]}, {q[0], q[1], q[2]});
    });
}

//---------------------------------------------------------------------------//
void sc_run_config_init(sc_run_config* config)
{
    if (!config)
        return;
    signedchord::RunOptions const o;
    *config = sc_run_config{};
    config->seed = o.seed;
    config->samples = o.samples;
    config->bins = o.bins;
    config->streams = o.streams;
    config->workers = o.workers;
    config->window = o.window;
    config->nsigma = o.nsigma;
}

sc_status sc_run(char const* command,
                 sc_body const* body,
                 sc_field const* field,
                 sc_run_config const* config,
                 sc_result** out)
{
    SC_REQUIRE(command && config && out, "null argument to sc_run");
    *out = nullptr;
    return guarded([&] {
        auto run = signedchord::run_command(command,
                                            body ? &body->body : nullptr,
                                            field ? &field->field : nullptr,
                                            to_options(*config));
        auto* r = new sc_result;
        r->json = signedchord::dump_report(run.report);
        r->run = std::move(run);
        *out = r;
    });
}

char const* sc_result_json(sc_result const* result)
{
    return result ? result->json.c_str() : nullptr;
}

char const* sc_result_text(sc_result const* result)
{
    return result ? result->run.text.c_str() : nullptr;
}

int sc_result_passed(sc_result const* result)
{
    return result && result->run.passed;
}

size_t sc_result_table_count(sc_result const* result)
{
    return result ? result->run.tables.size() : 0;
}

char const* sc_result_table_name(sc_result const* result, size_t index)
{
    if (!result || index >= result->run.tables.size())
        return nullptr;
    return result->run.tables[index].first.c_str();
}

char const* sc_result_table_csv(sc_result const* result, size_t index)
{
    if (!result || index >= result->run.tables.size())
        return nullptr;
    return result->run.tables[index].second.c_str();
}

void sc_result_free(sc_result* result)
{
    delete result;
}

//---------------------------------------------------------------------------//
}  // extern "C"
