#ifndef KNOTAPPROX_H
#define KNOTAPPROX_H

/* C interface to libknotapprox. Objects are opaque handles released with the
 * matching *_free function. Strings returned through char** are allocated by
 * the library and released with ka_string_free. On failure a function returns
 * a nonzero ka_status and ka_last_error() describes the problem for the
 * calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KA_BUILDING_LIBRARY)
#define KA_API __attribute__((visibility("default")))
#else
#define KA_API
#endif

typedef enum ka_status {
  KA_OK = 0,
  KA_ERR_PARSE = 1,
  KA_ERR_IO = 2,
  KA_ERR_RESOURCE = 3,
  KA_ERR_DOMAIN = 4,
  KA_ERR_UNSUPPORTED = 5,
  KA_ERR_LEMMA = 6,
  KA_ERR_CONSISTENCY = 7,
  KA_ERR_SINGULAR_MATRIX = 8,
  KA_ERR_INVALID_ARGUMENT = 9,
  KA_ERR_INTERNAL = 10
} ka_status;

typedef enum ka_polynomial {
  KA_HOMFLYPT = 0,
  KA_DUBROVNIK_DELTA = 1,
  KA_DUBROVNIK = 2,
  KA_KAUFFMAN = 3
} ka_polynomial;

typedef struct ka_diagram ka_diagram;
typedef struct ka_poly ka_poly;
typedef struct ka_table ka_table;
typedef struct ka_config ka_config;

KA_API const char* ka_last_error(void);
KA_API const char* ka_status_name(ka_status status);
KA_API void ka_string_free(char* s);

/* Diagrams */
KA_API ka_status ka_diagram_from_pd(const char* text, ka_diagram** out);
KA_API ka_status ka_diagram_from_braid(const char* text, ka_diagram** out);
/* A file path or the name of a bundled corpus entry. */
KA_API ka_status ka_diagram_load(const char* ref, ka_diagram** out);
KA_API void ka_diagram_free(ka_diagram* d);
KA_API int ka_diagram_components(const ka_diagram* d);
KA_API size_t ka_diagram_crossings(const ka_diagram* d);
KA_API ka_status ka_diagram_writhe(const ka_diagram* d, int* out);
KA_API ka_status ka_diagram_to_pd(const ka_diagram* d, char** out);

/* Polynomials */
KA_API ka_status ka_compute(const ka_diagram* d, ka_polynomial which, size_t crossing_cap,
                            ka_poly** out);
KA_API void ka_poly_free(ka_poly* p);
KA_API ka_status ka_poly_to_string(const ka_poly* p, char** out);
KA_API size_t ka_poly_term_count(const ka_poly* p);
/* Term i in exponent order; the coefficient is written as "p" or "p/q". */
KA_API ka_status ka_poly_term(const ka_poly* p, size_t i, int* e1, int* e2, char** coefficient);

/* Coefficient tables of HOMFLYPT polynomials */
KA_API ka_status ka_table_from_diagram(const ka_diagram* d, size_t crossing_cap, ka_table** out);
KA_API ka_status ka_table_from_json(const char* json, ka_table** out);
KA_API void ka_table_free(ka_table* t);
KA_API ka_status ka_table_to_json(const ka_table* t, char** out);
KA_API ka_status ka_table_w(const ka_table* t, long N, int q, char** out);
KA_API ka_status ka_table_B(const ka_table* t, int m, int j, char** out);

/* Command runner. Keys: command, pd, braid, table, which, qmax, nmax, Nmax,
 * precision, cap, format, seed, only, mutate. */
KA_API ka_config* ka_config_new(void);
KA_API void ka_config_free(ka_config* c);
KA_API ka_status ka_config_set(ka_config* c, const char* key, const char* value);
/* Runs the configured command. The report and diagnostics may be NULL when
 * not wanted; exit_code receives the process exit code of the command. */
KA_API ka_status ka_run(const ka_config* c, char** report, char** diagnostics, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
