/* artinx: exact Burnside-ring computations for finite groups of order <= 256.
 *
 * C interface. All objects are opaque handles; every call returns an
 * artinx_status and writes results through out-parameters. On error the
 * message for the calling thread is available from artinx_last_error().
 * Strings returned through `char**` must be released with artinx_string_free().
 */
#ifndef ARTINX_ARTINX_H
#define ARTINX_ARTINX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARTINX_BUILDING_LIBRARY)
#    define ARTINX_API __declspec(dllexport)
#  else
#    define ARTINX_API __declspec(dllimport)
#  endif
#else
#  define ARTINX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artinx_status {
  ARTINX_OK = 0,
  ARTINX_ERR_PARSE = 1,              /* malformed group spec or option text */
  ARTINX_ERR_INVALID_ARGUMENT = 2,   /* null pointer, bad index, violated precondition */
  ARTINX_ERR_LIMIT = 3,              /* order cap, subgroup cap or arithmetic range */
  ARTINX_ERR_METHOD_DISAGREEMENT = 4,/* congruence and marks exponents differ */
  ARTINX_ERR_CHECK_FAILED = 5,       /* a sweep suite reported a violation */
  ARTINX_ERR_INTERNAL = 6
} artinx_status;

typedef enum artinx_method {
  ARTINX_METHOD_BOTH = 0,
  ARTINX_METHOD_CONGRUENCE = 1,
  ARTINX_METHOD_MARKS = 2
} artinx_method;

typedef enum artinx_format {
  ARTINX_FORMAT_TEXT = 0,
  ARTINX_FORMAT_JSON = 1
} artinx_format;

/* Selects e_U: all cyclic classes when `classes` is NULL, otherwise the listed class indices. */
typedef struct artinx_family {
  const uint32_t* classes;
  size_t count;
} artinx_family;

typedef struct artinx_group artinx_group;

ARTINX_API const char* artinx_version(void);
ARTINX_API const char* artinx_last_error(void);
ARTINX_API const char* artinx_status_string(artinx_status status);
ARTINX_API void artinx_string_free(char* s);

/* Builds the group, its subgroup lattice and its table of marks.
 * `cache_dir` may be NULL or empty to disable the lattice cache. */
ARTINX_API artinx_status artinx_group_create(const char* spec, const char* cache_dir, artinx_group** out);
ARTINX_API void artinx_group_destroy(artinx_group* group);

ARTINX_API artinx_status artinx_group_order(const artinx_group* group, uint32_t* out);
ARTINX_API artinx_status artinx_group_class_count(const artinx_group* group, uint32_t* out);
ARTINX_API artinx_status artinx_group_subgroup_count(const artinx_group* group, uint32_t* out);
ARTINX_API artinx_status artinx_group_is_cyclic(const artinx_group* group, int* out);
/* Order of the representative of class `cls` and its conjugacy class size. */
ARTINX_API artinx_status artinx_group_class_info(const artinx_group* group, uint32_t cls, uint32_t* order,
                                                 uint32_t* conjugates, int* is_cyclic);

/* Table of marks entry: number of cosets of the class-`v_class` subgroup fixed by the class-`u_class` subgroup. */
ARTINX_API artinx_status artinx_mark(const artinx_group* group, uint32_t u_class, uint32_t v_class, int64_t* out);
ARTINX_API artinx_status artinx_conductor(const artinx_group* group, uint64_t* out);

/* Artin exponent. With ARTINX_METHOD_BOTH, returns ARTINX_ERR_METHOD_DISAGREEMENT if the two
 * methods differ (and writes the congruence value). `family` may be NULL (all cyclic). */
ARTINX_API artinx_status artinx_exponent(const artinx_group* group, const artinx_family* family,
                                         artinx_method method, uint64_t* out);

/* Full exponent report (text or JSON schema 1). `audit` lists every congruence pair.
 * Returns ARTINX_ERR_METHOD_DISAGREEMENT (with the report still written) when methods differ. */
ARTINX_API artinx_status artinx_report(const artinx_group* group, const artinx_family* family,
                                       artinx_method method, int audit, artinx_format format, char** out);

ARTINX_API artinx_status artinx_marks_render(const artinx_group* group, artinx_format format, char** out);

typedef struct artinx_sweep_options {
  uint32_t max_order;    /* 0 selects the default (64) */
  const char* checks;    /* comma-separated suites; NULL or "" selects all */
  uint32_t jobs;         /* 0 or 1 runs single-threaded */
  int timings;           /* include timing columns / section */
  const char* cache_dir; /* NULL or "" disables caching */
} artinx_sweep_options;

/* Runs the catalog sweep. Writes a text summary and/or the JSON document (either pointer
 * may be NULL). Returns ARTINX_ERR_CHECK_FAILED when any failing suite reports a violation. */
ARTINX_API artinx_status artinx_sweep(const artinx_sweep_options* options, char** text_out, char** json_out,
                                      uint32_t* failure_count);

#ifdef __cplusplus
}
#endif

#endif /* ARTINX_ARTINX_H */
