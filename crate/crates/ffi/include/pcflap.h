#ifndef PCFLAP_H
#define PCFLAP_H

/* Generated by cbindgen from the pcflap-ffi sources; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes.
 */
typedef enum PcfStatus {
  PCF_STATUS_OK = 0,
  PCF_STATUS_POLE = 1,
  PCF_STATUS_PARAMETER_POLE = 2,
  PCF_STATUS_NON_CONVERGENCE = 3,
  PCF_STATUS_DOMAIN = 4,
  PCF_STATUS_NON_FINITE = 5,
  PCF_STATUS_INVALID_PARAMS = 6,
  PCF_STATUS_UNKNOWN_CASE = 7,
  PCF_STATUS_CONFIG = 8,
  PCF_STATUS_IO = 9,
  PCF_STATUS_NULL_POINTER = 10,
  PCF_STATUS_PANIC = 11,
} PcfStatus;

/*
 Verdict of a verification report.
 */
typedef enum PcfVerdict {
  PCF_VERDICT_PASS = 0,
  PCF_VERDICT_FAIL = 1,
  PCF_VERDICT_SKIPPED = 2,
} PcfVerdict;

/*
 Opaque verification report.
 */
typedef struct PcfReport PcfReport;

/*
 A complex number with the layout of C99 `double _Complex`.
 */
typedef struct PcfComplex {
  double re;
  double im;
} PcfComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread (empty if none). The
 pointer stays valid until the next failing call on the same thread.
 */
const char *pcf_last_error_message(void);

/*
 Γ(z).
 */
enum PcfStatus pcf_gamma(struct PcfComplex z, struct PcfComplex *out);

/*
 1/Γ(z); zero at the poles of Γ.
 */
enum PcfStatus pcf_reciprocal_gamma(struct PcfComplex z, struct PcfComplex *out);

/*
 erf(x).
 */
enum PcfStatus pcf_erf(double x, double *out);

/*
 erfc(x).
 */
enum PcfStatus pcf_erfc(double x, double *out);

/*
 Kummer's Φ(a; b; z) = ₁F₁(a; b; z).
 */
enum PcfStatus pcf_kummer_phi(struct PcfComplex a,
                              struct PcfComplex b,
                              struct PcfComplex z,
                              struct PcfComplex *out);

/*
 ₂F₁(a, b; c; z) for real `z ≤ 1` (complex `z` only for `|z| ≤ 1/2`).
 */
enum PcfStatus pcf_gauss_2f1(struct PcfComplex a,
                             struct PcfComplex b,
                             struct PcfComplex c,
                             struct PcfComplex z,
                             struct PcfComplex *out);

/*
 ₂F₂(a1, a2; b1, b2; z).
 */
enum PcfStatus pcf_hyp_2f2(struct PcfComplex a1,
                           struct PcfComplex a2,
                           struct PcfComplex b1,
                           struct PcfComplex b2,
                           struct PcfComplex z,
                           struct PcfComplex *out);

/*
 Appell F₁(a; b1, b2; c; z1, z2) for `Re c > Re a > 0`, `z1, z2 < 1`.
 */
enum PcfStatus pcf_appell_f1(struct PcfComplex a,
                             struct PcfComplex b1,
                             struct PcfComplex b2,
                             struct PcfComplex c,
                             double z1,
                             double z2,
                             struct PcfComplex *out);

/*
 Parabolic cylinder function D_ν(z) for real `|z| ≤ 40`.
 */
enum PcfStatus pcf_parabolic_d(struct PcfComplex nu, double z, struct PcfComplex *out);

/*
 Number of registered cases.
 */
uintptr_t pcf_catalog_len(void);

/*
 Id of case `index` as a static NUL-terminated string, or null when out of range.
 */
const char *pcf_catalog_id(uintptr_t index);

/*
 Verify case `id` on its default grid. `tol <= 0` selects the case's
 default tolerance. On success `*out` receives a report handle.

 # Safety
 `id` must be a valid NUL-terminated string; `out` must be writable.
 */
enum PcfStatus pcf_verify(const char *id, double tol, struct PcfReport **out);

/*
 Raw verdict of the report (negative controls report `FAIL`).

 # Safety
 `report` must be a live handle from [`pcf_verify`].
 */
enum PcfStatus pcf_report_verdict(const struct PcfReport *report_handle, enum PcfVerdict *out);

/*
 1 when the verdict is the expected one for the case, 0 otherwise.

 # Safety
 `report` must be a live handle from [`pcf_verify`].
 */
enum PcfStatus pcf_report_as_expected(const struct PcfReport *report_handle, int32_t *out);

/*
 Largest relative error over the evaluated points (NaN if none).

 # Safety
 `report` must be a live handle from [`pcf_verify`].
 */
enum PcfStatus pcf_report_max_rel_error(const struct PcfReport *report_handle, double *out);

/*
 Number of grid points in the report.

 # Safety
 `report` must be a live handle from [`pcf_verify`].
 */
enum PcfStatus pcf_report_len(const struct PcfReport *report_handle, uintptr_t *out);

/*
 The report as a JSON array; release with [`pcf_string_free`].

 # Safety
 `report` must be a live handle from [`pcf_verify`].
 */
enum PcfStatus pcf_report_json(const struct PcfReport *report_handle, char **out);

/*
 Release a report handle. Null is ignored.

 # Safety
 `report` must be null or a handle from [`pcf_verify`] not yet freed.
 */
void pcf_report_free(struct PcfReport *report_handle);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void pcf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PCFLAP_H */
