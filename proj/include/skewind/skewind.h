#ifndef SKEWIND_SKEWIND_H_
#define SKEWIND_SKEWIND_H_

/* C interface to the skewind library. Structures are exchanged as JSON
 * text (see json_io.hpp for the formats) and held behind opaque handles.
 * Every function returning skw_status leaves a message for skw_last_error
 * on failure; strings returned through char** are owned by the caller and
 * released with skw_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SKW_BUILDING_LIBRARY)
#    define SKW_API __declspec(dllexport)
#  else
#    define SKW_API __declspec(dllimport)
#  endif
#else
#  define SKW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skw_status {
  SKW_OK = 0,
  SKW_ERR_ARGUMENT = 1,     /* null pointer or out-of-range argument */
  SKW_ERR_MALFORMED = 2,    /* input does not parse or has the wrong shape */
  SKW_ERR_BOUND = 3,        /* enumeration or catalog bound exceeded */
  SKW_ERR_PRECONDITION = 4, /* input is well formed but fails a required law */
  SKW_ERR_UNDEFINED = 5,    /* undefined composition requested */
  SKW_ERR_INTERNAL = 6
} skw_status;

typedef struct skw_skew_lattice skw_skew_lattice;
typedef struct skw_groupoid skw_groupoid;
typedef struct skw_system skw_system;
typedef struct skw_algebra skw_algebra;
typedef struct skw_action skw_action;
typedef struct skw_report skw_report;
typedef struct skw_model_suite skw_model_suite;

SKW_API char const* skw_version(void);
/* Message of the last failure on this thread, "" if none. */
SKW_API char const* skw_last_error(void);
/* Kind of the last failure on this thread, e.g. "axiom-violation". */
SKW_API char const* skw_last_error_kind(void);
SKW_API void        skw_string_free(char* s);

SKW_API skw_status skw_skew_lattice_from_json(char const* text,
                                              skw_skew_lattice** out);
SKW_API skw_status skw_skew_lattice_to_json(skw_skew_lattice const* s,
                                            char** out);
SKW_API void       skw_skew_lattice_free(skw_skew_lattice* s);

SKW_API skw_status skw_groupoid_from_json(char const* text, skw_groupoid** out);
SKW_API skw_status skw_groupoid_to_json(skw_groupoid const* g, char** out);
SKW_API void       skw_groupoid_free(skw_groupoid* g);

SKW_API skw_status skw_system_from_json(char const* text, skw_system** out);
SKW_API skw_status skw_system_to_json(skw_system const* s, char** out);
SKW_API void       skw_system_free(skw_system* s);

SKW_API skw_status skw_algebra_from_json(char const* text, skw_algebra** out);
SKW_API skw_status skw_algebra_to_json(skw_algebra const* a, char** out);
SKW_API void       skw_algebra_free(skw_algebra* a);

SKW_API skw_status skw_action_from_json(char const* text, skw_action** out);
SKW_API void       skw_action_free(skw_action* a);

/* Checkers. A report is a list of sections, each a list of named flags. */
SKW_API skw_status skw_check_skew_lattice(skw_skew_lattice const* s,
                                          skw_report** out);
SKW_API skw_status skw_check_groupoid(skw_groupoid const* g, skw_report** out);
/* Sections: groupoid, skew-lattice, restriction, extension, linking,
 * derived. */
SKW_API skw_status skw_check_system(skw_system const* s, skw_report** out);
/* Sections: axioms, plus-minus. */
SKW_API skw_status skw_check_algebra(skw_algebra const* a, skw_report** out);
/* Sections: action, semidirect, kernels. */
SKW_API skw_status skw_check_action(skw_action const* a, skw_report** out);

SKW_API int        skw_report_passed(skw_report const* r);
SKW_API size_t     skw_report_section_count(skw_report const* r);
/* Index of the first section with a failing flag, or -1. */
SKW_API int        skw_report_first_failing_section(skw_report const* r);
SKW_API skw_status skw_report_to_json(skw_report const* r, char** out);
SKW_API skw_status skw_report_summary(skw_report const* r, char** out);
SKW_API void       skw_report_free(skw_report* r);

/* *found is set to 1 and *out to {"s":..,"t":..,"op":..} when a pair with
 * (s o t)* != t* o s* exists, else *found = 0 and *out = NULL. */
SKW_API skw_status skw_anti_automorphism_witness(skw_algebra const* a,
                                                 int* found,
                                                 char** out);

/* Verifies the system first (SKW_ERR_PRECONDITION on failure). */
SKW_API skw_status skw_build_algebra(skw_system const* s, skw_algebra** out);
SKW_API skw_status skw_reconstruct(skw_algebra const* a, skw_system** out);
/* Certified isomorphisms as JSON: {"objects": [..], "morphisms": [..]} for a
 * system and [..] (element map) for an algebra. */
SKW_API skw_status skw_roundtrip_system(skw_system const* s, char** out);
SKW_API skw_status skw_roundtrip_algebra(skw_algebra const* a, char** out);

/* JSON arrays of canonical tables: band tables for bands, skew lattice
 * objects for skew lattices. */
SKW_API skw_status skw_enumerate_bands(size_t n, size_t bound, char** out);
SKW_API skw_status skw_enumerate_skew_lattices(size_t n,
                                               size_t bound,
                                               char** out);

SKW_API skw_status  skw_generate_models(size_t max_group,
                                        size_t max_band,
                                        skw_model_suite** out);
SKW_API size_t      skw_model_suite_size(skw_model_suite const* m);
SKW_API char const* skw_model_suite_name(skw_model_suite const* m, size_t i);
SKW_API skw_status  skw_model_suite_instance_json(skw_model_suite const* m,
                                                  size_t i,
                                                  char** out);
SKW_API void        skw_model_suite_free(skw_model_suite* m);

#ifdef __cplusplus
}
#endif

#endif /* SKEWIND_SKEWIND_H_ */
