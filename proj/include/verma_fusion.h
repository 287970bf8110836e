/* C interface to the Verma-module fusion library.
 *
 * All scalar arguments are text in the grammar [±]p[/q][±r[/s]i]
 * (e.g. "3/2-1/2i", "i", "-2").  Results come back as JSON documents in
 * heap-allocated strings; free them with vf_string_free.  Functions return
 * VF_OK on success; on any other status vf_last_error(session) holds a
 * diagnostic message.  A session is not thread-safe; use one per thread.
 */
#ifndef VERMA_FUSION_H
#define VERMA_FUSION_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vf_session vf_session;

typedef enum vf_status {
  VF_OK = 0,
  VF_ERR_DISAGREEMENT = 1, /* oracle disagrees with the closed form */
  VF_ERR_INPUT = 2,        /* malformed scalar/polynomial/grid input */
  VF_ERR_PRECONDITION = 3, /* parity violated or cutoff insufficient */
  VF_ERR_INTERNAL = 4
} vf_status;

/* flags for vf_decompose */
#define VF_DECOMPOSE_VERIFY 1        /* run the brute-force oracle per orbit */
#define VF_DECOMPOSE_DUMP_MATRICES 2 /* include layer operator matrices */

vf_session* vf_session_new(void);
void vf_session_free(vf_session* session);

/* Message for the most recent failing call on this session; owned by the
 * session, valid until the next call. */
const char* vf_last_error(const vf_session* session);

const char* vf_version(void);

void vf_string_free(char* text);

/* Indecomposable decomposition of M(mu1) (x) M(mu2), truncated at `cutoff`
 * layers.  With VF_DECOMPOSE_VERIFY the oracle evidence is included and
 * VF_ERR_DISAGREEMENT is returned if it contradicts the closed form. */
vf_status vf_decompose(vf_session* session, const char* mu1, const char* mu2,
                       unsigned cutoff, unsigned flags, char** out_json);

/* Rankin-Cohen bracket coefficients for (lam1, lam2, lam3). */
vf_status vf_rc(vf_session* session, const char* lam1, const char* lam2,
                const char* lam3, char** out_json);

/* As vf_rc, and also applies the bracket to two polynomials given as JSON
 * arrays of scalar strings (ascending degree). */
vf_status vf_rc_apply(vf_session* session, const char* lam1, const char* lam2,
                      const char* lam3, const char* f_json, const char* g_json,
                      char** out_json);

/* dim Hom(M(-lam3), M(-lam1) (x) M(-lam2)). */
vf_status vf_homdim(vf_session* session, const char* lam1, const char* lam2,
                    const char* lam3, unsigned cutoff, char** out_json);

/* Runs one grid line "suite,scalar,...".  Returns VF_OK with
 * {"pass": true/false, ...} in out_json; VF_ERR_DISAGREEMENT when the case
 * fails. */
vf_status vf_verify_case(vf_session* session, const char* case_line, unsigned cutoff,
                         char** out_json);

#ifdef __cplusplus
}
#endif

#endif
