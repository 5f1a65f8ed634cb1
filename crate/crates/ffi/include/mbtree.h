#ifndef MBTREE_H
#define MBTREE_H

/* Generated by cbindgen from mbtree-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum MbtStatus {
  MBT_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  MBT_STATUS_NULL_ARGUMENT = 1,
  /**
   * (0,0) names no curve.
   */
  MBT_STATUS_ZERO_CURVE = 2,
  /**
   * The coefficients have a common factor.
   */
  MBT_STATUS_NON_PRIMITIVE = 3,
  /**
   * The curve bounds no one-sided surface (odd longitude).
   */
  MBT_STATUS_NOT_ONE_SIDED = 4,
  /**
   * The slope is not a vertex of the tree.
   */
  MBT_STATUS_NOT_A_VERTEX = 5,
  /**
   * The root (0,1) has no parent.
   */
  MBT_STATUS_ROOT_HAS_NO_PARENT = 6,
  /**
   * Two parent candidates qualified; the structural uniqueness claim
   * failed and the operation refused to choose.
   */
  MBT_STATUS_AMBIGUOUS_PARENT = 7,
  /**
   * The slope's compression chain leaves the tree through an excluded
   * (2,b) slope; it is twist-equivalent to a tree slope.
   */
  MBT_STATUS_DETACHED_SLOPE = 8,
  /**
   * Enumeration bound below 2.
   */
  MBT_STATUS_BOUND_TOO_SMALL = 9,
  /**
   * Enumeration bound above the supported cap.
   */
  MBT_STATUS_BOUND_TOO_LARGE = 10,
  /**
   * Invalid Dehn filling parameters.
   */
  MBT_STATUS_INVALID_SPEC = 11,
  /**
   * Tree-computed genera contradicted the ratio verdict.
   */
  MBT_STATUS_INCONSISTENT = 12,
  /**
   * A result does not fit the 64-bit out-parameter.
   */
  MBT_STATUS_OVERFLOW = 13,
} MbtStatus;

/**
 * Tree serialisation formats accepted by [`mbtree_tree_export`].
 */
typedef enum MbtTreeFormat {
  MBT_TREE_FORMAT_DOT = 0,
  MBT_TREE_FORMAT_JSON = 1,
} MbtTreeFormat;

/**
 * Opaque classification result; create with [`mbtree_classify`], inspect
 * with the `mbtree_report_*` accessors, release with [`mbtree_report_free`].
 */
typedef struct MbtReport MbtReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *mbtree_version(void);

/**
 * Genus of the one-sided surface bounded by `(longitude, meridian)`.
 *
 * # Safety
 * `out_genus` must be a valid pointer.
 */
enum MbtStatus mbtree_genus(int64_t longitude, int64_t meridian, uint64_t *out_genus);

/**
 * Parent vertex in the tree: the unique smaller-longitude slope at
 * intersection number 2.
 *
 * # Safety
 * `out_longitude` and `out_meridian` must be valid pointers.
 */
enum MbtStatus mbtree_parent(int64_t longitude,
                             int64_t meridian,
                             int64_t *out_longitude,
                             int64_t *out_meridian);

/**
 * Signed intersection number of the canonical representatives of two slopes.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MbtStatus mbtree_intersection_number(int64_t u_longitude,
                                          int64_t u_meridian,
                                          int64_t v_longitude,
                                          int64_t v_meridian,
                                          int64_t *out);

/**
 * Whether the root path of the slope passes through the vertex (4,1);
 * equivalently, whether longitude exceeds three times the meridian.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MbtStatus mbtree_passes_through_41(int64_t longitude, int64_t meridian, bool *out);

/**
 * Serialises the tree up to `longitude_bound` in the requested format. The
 * string must be released with [`mbtree_string_free`].
 *
 * # Safety
 * `out_text` must be a valid pointer.
 */
enum MbtStatus mbtree_tree_export(uint64_t longitude_bound,
                                  enum MbtTreeFormat format,
                                  char **out_text);

/**
 * Classifies the splitting surfaces of the `(2p, q)` Dehn filling and hands
 * back an opaque report.
 *
 * # Safety
 * `out_report` must be a valid pointer.
 */
enum MbtStatus mbtree_classify(int64_t p, int64_t q, struct MbtReport **out_report);

/**
 * Number of surfaces in a report; always 3 for valid reports.
 *
 * # Safety
 * `report` must be a pointer returned by [`mbtree_classify`].
 */
size_t mbtree_report_surface_count(const struct MbtReport *report);

/**
 * Total crosscap genus of surface `index` (0 = the Seifert-slope surface,
 * 1 and 2 the two Klein-bottle-slope surfaces).
 *
 * # Safety
 * `report` must come from [`mbtree_classify`]; `out_genus` must be valid.
 */
enum MbtStatus mbtree_report_total_genus(const struct MbtReport *report,
                                         size_t index,
                                         uint64_t *out_genus);

/**
 * Whether surface `index` is flagged minimal genus.
 *
 * # Safety
 * `report` must come from [`mbtree_classify`]; `out_minimal` must be valid.
 */
enum MbtStatus mbtree_report_is_minimal(const struct MbtReport *report,
                                        size_t index,
                                        bool *out_minimal);

/**
 * True when the filling has a unique geometrically incompressible splitting
 * surface, false for the two-candidate case.
 *
 * # Safety
 * `report` must come from [`mbtree_classify`]; `out_unique` must be valid.
 */
enum MbtStatus mbtree_report_verdict_unique(const struct MbtReport *report, bool *out_unique);

/**
 * Full report as a JSON document; release with [`mbtree_string_free`].
 *
 * # Safety
 * `report` must come from [`mbtree_classify`]; `out_json` must be valid.
 */
enum MbtStatus mbtree_report_json(const struct MbtReport *report, char **out_json);

/**
 * Releases a report returned by [`mbtree_classify`]. NULL is a no-op.
 *
 * # Safety
 * `report` must come from [`mbtree_classify`] and not have been freed.
 */
void mbtree_report_free(struct MbtReport *report);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must have been returned by an `mbtree_*` function and not freed yet.
 */
void mbtree_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MBTREE_H */
