#ifndef TRIDEC_H
#define TRIDEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TRIDEC_API __attribute__((visibility("default")))
#else
#define TRIDEC_API
#endif

typedef enum tridec_status {
    TRIDEC_OK = 0,
    TRIDEC_ERR_PARSE = 1,    /* input text does not parse */
    TRIDEC_ERR_INVALID = 2,  /* input parses but violates a precondition */
    TRIDEC_ERR_INTERNAL = 3, /* internal-consistency fault */
    TRIDEC_ERR_ARG = 4,      /* bad argument to this API (null handle, unknown mode, ...) */
    TRIDEC_ERR_IO = 5
} tridec_status;

typedef struct tridec_config tridec_config;
typedef struct tridec_report tridec_report;

/* Message for the last failing call on this thread; "" when none. */
TRIDEC_API const char* tridec_last_error(void);
TRIDEC_API const char* tridec_version(void);

TRIDEC_API tridec_status tridec_config_new(tridec_config** out);
TRIDEC_API void tridec_config_free(tridec_config* config);
/* "decompose", "unmixed-only", "bounds-only" or "verify". */
TRIDEC_API tridec_status tridec_config_set_mode(tridec_config* config, const char* mode);
/* Comma-separated variable names, lowest first. NULL or "" restores x1..xn. */
TRIDEC_API tridec_status tridec_config_set_order(tridec_config* config, const char* names);
TRIDEC_API tridec_status tridec_config_set_m(tridec_config* config, unsigned m);
TRIDEC_API tridec_status tridec_config_set_seed(tridec_config* config, uint64_t seed);
TRIDEC_API tridec_status tridec_config_set_verify(tridec_config* config, int enabled);
/* Chain-family text replacing the computed candidate chains; NULL clears it. */
TRIDEC_API tridec_status tridec_config_set_bypass(tridec_config* config, const char* text);
/* Parameters for bounds-only mode. */
TRIDEC_API tridec_status tridec_config_set_bound_params(tridec_config* config, unsigned n, unsigned d, unsigned r);

/* Runs the configured mode on input text. Unless the result is TRIDEC_ERR_ARG
   or TRIDEC_ERR_IO, *out holds a report, also for PARSE, INVALID and INTERNAL
   (the report then carries an "error" object). */
TRIDEC_API tridec_status tridec_run(const tridec_config* config, const char* input, tridec_report** out);
/* Same, reading the input from a file. NULL path means empty input. */
TRIDEC_API tridec_status tridec_run_file(const tridec_config* config, const char* path, tridec_report** out);
TRIDEC_API void tridec_report_free(tridec_report* report);
/* JSON document; owned by the report. */
TRIDEC_API const char* tridec_report_json(const tridec_report* report);
/* 0 success, 1 parse or validation error, 2 internal-consistency fault. */
TRIDEC_API int tridec_report_exit_code(const tridec_report* report);
/* 1-based line of a parse error, 0 otherwise. */
TRIDEC_API size_t tridec_report_error_line(const tridec_report* report);
/* Error message of a failed run, "" otherwise. */
TRIDEC_API const char* tridec_report_error(const tridec_report* report);

#ifdef __cplusplus
}
#endif

#endif
