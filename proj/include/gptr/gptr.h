/* C interface of the gptr library: load a GPT model, run one decision procedure,
 * receive a JSON report. All reports are heap strings released with
 * gptr_string_free. Functions never throw; on failure they return a nonzero
 * status and gptr_last_error() describes the problem (per thread). */
#ifndef GPTR_GPTR_H
#define GPTR_GPTR_H

#include <stddef.h>
#include <stdint.h>

#if defined(GPTR_BUILDING_LIBRARY)
#define GPTR_API __attribute__((visibility("default")))
#else
#define GPTR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gptr_model gptr_model;

typedef enum gptr_status {
  GPTR_OK = 0,          /* success: feasible, member, valid, certified */
  GPTR_NEGATIVE = 1,    /* computation succeeded with a negative answer; report written */
  GPTR_USAGE = 2,       /* bad argument: null pointer, unknown name, malformed number */
  GPTR_VALIDATION = 3,  /* model file or referenced object fails validation */
  GPTR_UNSUPPORTED = 4, /* backend or dimension outside what the procedure handles */
  GPTR_INTERNAL = 5
} gptr_status;

GPTR_API const char* gptr_version(void);
GPTR_API const char* gptr_last_error(void);
GPTR_API void gptr_string_free(char* s);

GPTR_API gptr_status gptr_model_load_file(const char* path, gptr_model** out);
GPTR_API gptr_status gptr_model_load_json(const char* text, gptr_model** out);
GPTR_API void gptr_model_free(gptr_model* model);

/* Per-object verdicts; NEGATIVE when any object is invalid. */
GPTR_API gptr_status gptr_validate(const gptr_model* model, char** report);

/* Simulability of meter `target` from the named simulators; NEGATIVE when infeasible. */
GPTR_API gptr_status gptr_simulate(const gptr_model* model, const char* target, const char* const* simulators,
                                   size_t count, char** report);

/* Classification of a named restriction with the given sampling seed and budget. */
GPTR_API gptr_status gptr_classify(const gptr_model* model, const char* restriction, uint64_t seed, size_t budget,
                                   char** report);

/* Effective n-tomicity certificate; NEGATIVE when certified not n-tomic. */
GPTR_API gptr_status gptr_ntomic(const gptr_model* model, const char* meter, size_t n, char** report);

/* Noise content, and membership in R_t when `t` is not NULL (NEGATIVE for a non-member). */
GPTR_API gptr_status gptr_noise(const gptr_model* model, const char* meter, const char* t, char** report);

/* Joint meter or Farkas certificate; NEGATIVE when incompatible. */
GPTR_API gptr_status gptr_compat(const gptr_model* model, const char* meter_a, const char* meter_b, char** report);

/* Unambiguous discrimination of two pure qubit states given by |<psi1|psi2>|^2 or by two
 * Bloch vectors (three rational strings each). `dichotomic` != 0 adds q1 + q2 <= 1. */
GPTR_API gptr_status gptr_ud_overlap(const char* overlap_sq, int dichotomic, char** report);
GPTR_API gptr_status gptr_ud_bloch(const char* const* n1, const char* const* n2, int dichotomic, char** report);

#ifdef __cplusplus
}
#endif

#endif /* GPTR_GPTR_H */
