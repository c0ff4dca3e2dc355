/* Generated by cbindgen; do not edit. */

#ifndef PERIODICITY_GATE_H
#define PERIODICITY_GATE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PgLift {
  PG_LIFT_PLUS = 0,
  PG_LIFT_MINUS = 1,
} PgLift;

typedef enum PgLiftSelection {
  PG_LIFT_SELECTION_PLUS = 0,
  PG_LIFT_SELECTION_MINUS = 1,
  PG_LIFT_SELECTION_BOTH = 2,
} PgLiftSelection;

typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_UTF8 = 2,
  PG_STATUS_PARSE = 3,
  PG_STATUS_VALIDATION = 4,
  PG_STATUS_DOMAIN = 5,
  PG_STATUS_OUT_OF_RANGE = 6,
  PG_STATUS_PANIC = 7,
  PG_STATUS_OTHER = 8,
} PgStatus;

typedef enum PgVerdict {
  PG_VERDICT_CONSISTENT = 0,
  PG_VERDICT_OBSTRUCTED = 1,
} PgVerdict;

/**
 * A factorization `unit * prod g_i^m_i`.
 */
typedef struct PgFactorization PgFactorization;

/**
 * A number field `Q[z]/(m)`.
 */
typedef struct PgField PgField;

/**
 * A polynomial in `t` over a field.
 */
typedef struct PgPoly PgPoly;

/**
 * Outcome of the free 2-periodicity test.
 */
typedef struct PgReport PgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *pg_version(void);

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call into the library from the same thread.
 */
const char *pg_last_error(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void pg_string_free(char *s);

/**
 * Builds `Q[var]/(min_poly)`. `min_poly` must be monic and irreducible;
 * pass `"z"` as the polynomial for `Q` itself.
 *
 * # Safety
 * `var` and `min_poly` are NUL-terminated strings, `out` is writable.
 */
enum PgStatus pg_field_new(const char *var, const char *min_poly, struct PgField **out_field);

/**
 * The rational field.
 */
struct PgField *pg_field_rationals(void);

/**
 * Degree of the field over `Q`, 0 for NULL.
 *
 * # Safety
 * `field` is NULL or a live handle.
 */
size_t pg_field_degree(const struct PgField *field);

/**
 * # Safety
 * `field` is NULL or a live handle not used afterwards.
 */
void pg_field_free(struct PgField *field);

/**
 * Parses a polynomial in `t` with coefficients in `field`.
 *
 * # Safety
 * `field` is a live handle, `src` NUL-terminated, `out_poly` writable.
 */
enum PgStatus pg_poly_parse(const struct PgField *field, const char *src, struct PgPoly **out_poly);

/**
 * Text form of the polynomial; release with [`pg_string_free`]. NULL for
 * a NULL handle.
 *
 * # Safety
 * `poly` is NULL or a live handle.
 */
char *pg_poly_to_string(const struct PgPoly *poly);

/**
 * Degree, or -1 for the zero polynomial or NULL.
 *
 * # Safety
 * `poly` is NULL or a live handle.
 */
int pg_poly_degree(const struct PgPoly *poly);

/**
 * # Safety
 * `poly` is NULL or a live handle not used afterwards.
 */
void pg_poly_free(struct PgPoly *poly);

/**
 * Factors `poly` into monic irreducibles over its field.
 *
 * # Safety
 * `poly` is a live handle, `out_factorization` writable.
 */
enum PgStatus pg_factor(const struct PgPoly *poly,
                        uint64_t seed,
                        struct PgFactorization **out_factorization);

/**
 * Number of distinct irreducible factors, 0 for NULL.
 *
 * # Safety
 * `f` is NULL or a live handle.
 */
size_t pg_factorization_len(const struct PgFactorization *f);

/**
 * The `index`-th factor as a new polynomial handle and its multiplicity.
 *
 * # Safety
 * `f` is a live handle; `out_poly` and `out_multiplicity` are writable.
 */
enum PgStatus pg_factorization_get(const struct PgFactorization *f,
                                   size_t index,
                                   struct PgPoly **out_poly,
                                   size_t *out_multiplicity);

/**
 * The leading unit as text; release with [`pg_string_free`].
 *
 * # Safety
 * `f` is NULL or a live handle.
 */
char *pg_factorization_unit(const struct PgFactorization *f);

/**
 * # Safety
 * `f` is NULL or a live handle not used afterwards.
 */
void pg_factorization_free(struct PgFactorization *f);

/**
 * Irreducibility over the polynomial's field. Constants are a domain
 * error.
 *
 * # Safety
 * `poly` is a live handle, `out_irreducible` writable.
 */
enum PgStatus pg_is_irreducible(const struct PgPoly *poly, uint64_t seed, bool *out_irreducible);

/**
 * Free 2-periodicity test on a torsion polynomial `torsion` whose
 * representation has meridian trace sign `declared`.
 *
 * # Safety
 * `torsion` is a live handle, `out_report` writable.
 */
enum PgStatus pg_obstruct(const struct PgPoly *torsion,
                          enum PgLift declared,
                          enum PgLiftSelection selection,
                          uint64_t seed,
                          struct PgReport **out_report);

/**
 * Verdict of a report; OBSTRUCTED for NULL.
 *
 * # Safety
 * `report` is NULL or a live handle.
 */
enum PgVerdict pg_report_verdict(const struct PgReport *report);

/**
 * The factor `f` with `T(-t^2) = unit * f(t) f(-t)` as a new handle, or
 * NULL when obstructed.
 *
 * # Safety
 * `report` is NULL or a live handle.
 */
struct PgPoly *pg_report_factor_f(const struct PgReport *report);

/**
 * Number of explanatory notes.
 *
 * # Safety
 * `report` is NULL or a live handle.
 */
size_t pg_report_note_count(const struct PgReport *report);

/**
 * The `index`-th note; release with [`pg_string_free`]. NULL when out of
 * range.
 *
 * # Safety
 * `report` is NULL or a live handle.
 */
char *pg_report_note(const struct PgReport *report, size_t index);

/**
 * # Safety
 * `report` is NULL or a live handle not used afterwards.
 */
void pg_report_free(struct PgReport *report);

/**
 * Runs a CLI command (`"torsion"`, `"obstruct"`, `"factor"` or `"cover"`)
 * on a JSON input document and returns the JSON report, exactly as
 * `periodicity-gate <command> --json` prints it. `out_exit_code` receives
 * the CLI exit code. Errors inside the document are part of the report
 * and do not make this call fail.
 *
 * # Safety
 * `command` and `input_json` are NUL-terminated; the out-pointers are
 * writable.
 */
enum PgStatus pg_run_json(const char *command,
                          const char *input_json,
                          uint64_t seed,
                          char **out_json,
                          int *out_exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERIODICITY_GATE_H */
