#ifndef CYCLAUT_H
#define CYCLAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum CyclautStatus {
  CyclautStatus_Ok = 0,
  CyclautStatus_NullArgument = 1,
  CyclautStatus_ParseError = 2,
  CyclautStatus_Unsupported = 3,
  CyclautStatus_CapExceeded = 4,
  CyclautStatus_InternalError = 5,
} CyclautStatus;

/**
 * Opaque handle to a parsed cyclic object (code or graph).
 */
typedef struct CyclautObject CyclautObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying library, as a static string.
 */
const char *cyclaut_version(void);

/**
 * Message of the last error raised on this thread, or NULL.
 */
const char *cyclaut_last_error(void);

/**
 * Parses a JSON descriptor (`{"n":..,"q":..,"defining_set":[..]}` for a
 * cyclic code, `{"n":..,"connection":[..],"directed":..}` for a circulant
 * graph) into an opaque handle.
 *
 * # Safety
 * `json` must be a NUL-terminated C string; `out` must be a valid pointer.
 */
enum CyclautStatus cyclaut_object_parse(const char *json, struct CyclautObject **out);

/**
 * Releases a handle returned by `cyclaut_object_parse`. NULL is a no-op.
 *
 * # Safety
 * `obj` must be a pointer previously returned by `cyclaut_object_parse`
 * and not yet freed.
 */
void cyclaut_object_free(struct CyclautObject *obj);

/**
 * Classifies the automorphism group; writes the JSON report
 * (`{"tag":..,"order":..,"evidence":..}`) to `out_json`.
 *
 * # Safety
 * `obj` must be a live handle; `out_json` must be a valid pointer. The
 * written string is released with `cyclaut_string_free`.
 */
enum CyclautStatus cyclaut_classify(const struct CyclautObject *obj, char **out_json);

/**
 * Decides equivalence of two objects of the same category and length.
 * Writes the verdict into `out_equivalent` and, when `out_json` is not
 * NULL, the full witness report
 * (`{"equivalent":..,"witness":..,"checked":..,"space":..}`).
 *
 * # Safety
 * `a` and `b` must be live handles; `out_equivalent` must be valid;
 * `out_json` may be NULL. A written string is released with
 * `cyclaut_string_free`.
 */
enum CyclautStatus cyclaut_equivalent(const struct CyclautObject *a,
                                      const struct CyclautObject *b,
                                      uint64_t enumeration_cap,
                                      uint32_t jobs,
                                      bool *out_equivalent,
                                      char **out_json);

/**
 * Releases a string written by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must have been written by a cyclaut function and not yet freed.
 */
void cyclaut_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLAUT_H */
