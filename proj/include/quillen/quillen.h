/* C interface of the quillen library. All reports are UTF-8 JSON strings
 * owned by the caller and released with ql_string_free. */
#ifndef QUILLEN_QUILLEN_H
#define QUILLEN_QUILLEN_H

#include <stdint.h>

#if defined(QUILLEN_BUILDING_LIBRARY)
#define QL_API __attribute__((visibility("default")))
#else
#define QL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ql_status {
  QL_OK = 0,
  QL_REFUTED = 1,        /* check ran and came out negative */
  QL_CAPPED = 2,         /* enumeration cap or time budget exceeded */
  QL_INVALID_ARGUMENT = 3,
  QL_PARSE_ERROR = 4,
  QL_INTERNAL_ERROR = 5, /* two independent computations disagreed */
  QL_ERROR = 6
} ql_status;

typedef struct ql_group ql_group;
typedef struct ql_collection ql_collection;

QL_API const char *ql_version(void);
QL_API const char *ql_status_string(ql_status s);
/* Message of the last failing call on this thread; never NULL. */
QL_API const char *ql_last_error(void);
QL_API void ql_string_free(char *s);

/* "Alt(8)", "SL(4,2)", ... or a group spec object / name as JSON. */
QL_API ql_status ql_group_named(const char *name, ql_group **out);
QL_API ql_status ql_group_from_json(const char *json, ql_group **out);
QL_API ql_status ql_group_to_json(const ql_group *g, char **out);
/* Enumerates; QL_CAPPED past the cap. */
QL_API ql_status ql_group_order(const ql_group *g, uint64_t *out);
QL_API void ql_group_free(ql_group *g);

QL_API ql_status ql_collection_from_json(const char *json, ql_collection **out);
QL_API ql_status ql_collection_to_json(const ql_collection *c, char **out);
QL_API ql_status ql_collection_rank(const ql_collection *c, unsigned *out);
QL_API void ql_collection_free(ql_collection *c);

/* request: {"family": "sym-alt"|"a8"|"linear"|"sl42"|"sl62"|"projective",
 * "n":..,"q":..,"p":..,"kind":"GL"|"SL"|"PGL"|"PSL","alternating":bool,
 * "symmetric":bool}. The collection JSON carries a "recipe" member. */
QL_API ql_status ql_construct(const char *request_json, ql_collection **out,
                              char **collection_json);
/* Obstruction certificate for GL/SL/GU/SU(n,q) at p. */
QL_API ql_status ql_obstruction(const char *kind, unsigned n, uint64_t q,
                                unsigned p, char **report);

/* QL_OK when admissible, QL_REFUTED otherwise. */
QL_API ql_status ql_verify(const ql_collection *c, char **report);
/* QL_OK when a certificate is granted, QL_REFUTED when the coefficient or
 * independent checks fail (the report is still filled in). */
QL_API ql_status ql_certify(const ql_collection *c, char **report);
/* QL_OK when QD_p holds, QL_REFUTED otherwise. */
QL_API ql_status ql_homology(const ql_group *g, unsigned p, char **report);
/* limits: {"max_results","max_rank","time_budget","force","all",
 * "frame_reduction","conjugacy_reduction","cap"}; NULL for defaults.
 * QL_OK found, QL_REFUTED exhaustively-none or obstructed, QL_CAPPED. */
QL_API ql_status ql_search(const ql_group *g, unsigned p,
                           const char *limits_json, char **report);
/* options: {"only":[ids],"fault":id,"seed":n}; NULL for the full run.
 * QL_OK when every criterion passes. */
QL_API ql_status ql_paper_suite(const char *options_json, char **report);

#ifdef __cplusplus
}
#endif

#endif
