/*----------------------------------*-C-*------------------------------------*
 * Copyright 2026 signedchord developers.
 * SPDX-License-Identifier: Apache-2.0
 *---------------------------------------------------------------------------*/
/*!
 * \file signedchord/signedchord.h
 * \brief C interface to the signed chord length library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching \c _free function. Every fallible call returns an \c sc_status;
 * the message for the most recent failure on the calling thread is available
 * from \c sc_last_error until the next failing call.
 *
 * Strings returned by accessors stay valid until the owning handle is freed.
 *---------------------------------------------------------------------------*/
#ifndef SIGNEDCHORD_SIGNEDCHORD_H
#define SIGNEDCHORD_SIGNEDCHORD_H

#include <stddef.h>
#include <stdint.h>

#if defined(SIGNEDCHORD_BUILDING_LIBRARY)
#    define SC_API __attribute__((visibility("default")))
#else
#    define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status
{
    SC_OK = 0,
    SC_INVALID_ARGUMENT,
    SC_CONFIG,
    SC_IO,
    SC_UNSUPPORTED_METRICS,
    SC_REJECTION_STALL,
    SC_ZERO_CHARGE,
    SC_EDGE_MISMATCH,
    SC_EMPTY_INTERSECTION,
    SC_GRID_TOO_COARSE,
    SC_UNBOUNDED_WEIGHT,
    SC_NONCONVEX_UNSUPPORTED,
    SC_INTERNAL
} sc_status;

typedef struct sc_body sc_body;
typedef struct sc_field sc_field;
typedef struct sc_result sc_result;

typedef struct sc_metrics
{
    double volume;
    double surface;
    double hull_surface; /* NaN unless has_hull_surface */
    int has_hull_surface;
    double bounding_center[3];
    double bounding_radius;
    double mean_chord; /* 4 V / S */
    int convex;
} sc_metrics;

/*!
 * Options shared by all commands.
 *
 * Initialize with \c sc_run_config_init and override fields. String fields
 * may be NULL to keep the default; \c methods is a comma-separated list.
 */
typedef struct sc_run_config
{
    uint64_t seed;
    uint64_t samples;
    size_t bins;
    int has_range;
    double range_lo;
    double range_hi;
    size_t streams;
    size_t workers;
    char const* phi;
    char const* methods;
    char const* ell;
    double const* mfp;
    size_t mfp_count;
    size_t window;
    char const* slope;
    int compare;
    uint64_t aux_samples;
    double nsigma;
} sc_run_config;

/* Library information */
SC_API char const* sc_version(void);
SC_API char const* sc_status_name(sc_status status);
SC_API char const* sc_last_error(void);
SC_API size_t sc_command_count(void);
SC_API char const* sc_command_name(size_t index);

/* Bodies */
SC_API sc_status sc_body_load(char const* path, sc_body** out);
SC_API sc_status sc_body_parse(char const* json_text, sc_body** out);
SC_API void sc_body_free(sc_body* body);
SC_API sc_status sc_body_metrics(sc_body const* body, sc_metrics* out);
/*!
 * Intervals of the line origin + t * direction inside the body.
 *
 * Writes up to \c capacity (lo, hi) pairs into \c intervals (2 * capacity
 * doubles) and the total count into \c count; a count above capacity means
 * the output was truncated.
 */
SC_API sc_status sc_body_intersect(sc_body const* body,
                                   double const origin[3],
                                   double const direction[3],
                                   double* intervals,
                                   size_t capacity,
                                   size_t* count);

/* Density fields */
SC_API sc_status sc_field_load(char const* path, sc_field** out);
SC_API sc_status sc_field_parse(char const* json_text, sc_field** out);
SC_API void sc_field_free(sc_field* field);
SC_API sc_status sc_field_optical_length(sc_field const* field,
                                         double const p[3],
                                         double const q[3],
                                         double* out);

/* Commands */
SC_API void sc_run_config_init(sc_run_config* config);
/*!
 * Run a named command.
 *
 * \c optical needs a field (and optionally a body for comparison); all other
 * commands need a body. On success \c *out receives a result handle.
 */
SC_API sc_status sc_run(char const* command,
                        sc_body const* body,
                        sc_field const* field,
                        sc_run_config const* config,
                        sc_result** out);
SC_API char const* sc_result_json(sc_result const* result);
SC_API char const* sc_result_text(sc_result const* result);
SC_API int sc_result_passed(sc_result const* result);
SC_API size_t sc_result_table_count(sc_result const* result);
SC_API char const* sc_result_table_name(sc_result const* result, size_t index);
SC_API char const* sc_result_table_csv(sc_result const* result, size_t index);
SC_API void sc_result_free(sc_result* result);

#ifdef __cplusplus
}
#endif

#endif /* SIGNEDCHORD_SIGNEDCHORD_H */
