/*
  C interface to the shorttoric library.

  All objects are opaque handles; every function that can fail returns an
  st_status and writes its result through out-parameters. Strings returned
  through char** are heap-allocated and must be released with st_text_free;
  posets with st_poset_free. st_last_error_message() describes the most
  recent failure on the calling thread.
*/
#ifndef SHORTTORIC_H
#define SHORTTORIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_ERR_INVALID_ARGUMENT,
  ST_ERR_PARSE,
  ST_ERR_CYCLE_DETECTED,
  ST_ERR_MULTIPLE_MINIMA,
  ST_ERR_RANK_MISMATCH,
  ST_ERR_PARAMETER_OUT_OF_RANGE,
  ST_ERR_NOT_GRADED,
  ST_ERR_NOT_COMPARABLE,
  ST_ERR_NO_MINIMUM,
  ST_ERR_NO_RANK,
  ST_ERR_EVAL_AT_ZERO_WITH_NEGATIVE_EXPONENTS,
  ST_ERR_NEGATIVE_EXPONENT_PRESENT,
  ST_ERR_NOT_MULT_SYMMETRIC,
  ST_ERR_NOT_ADD_SYMMETRIC,
  ST_ERR_KIND_MISMATCH,
  ST_ERR_ALPHABET_MISMATCH,
  ST_ERR_ODD_E_WORD_PRESENT,
  ST_ERR_NOT_EULERIAN,
  ST_ERR_NOT_LOWER_EULERIAN,
  ST_ERR_UNEXPECTED_PARITY,
  ST_ERR_NOT_SIMPLICIAL,
  ST_ERR_NOT_DUAL_SIMPLICIAL,
  ST_ERR_DECOMPOSITION_MISMATCH,
  ST_ERR_ASYMMETRIC_H_VECTOR,
  ST_ERR_INDEX_OUT_OF_RANGE,
  ST_ERR_CONSECUTIVE_DESCENTS,
  ST_ERR_UNKNOWN_FAMILY,
  ST_ERR_SIZE_LIMIT_EXCEEDED,
  ST_ERR_INTERNAL
} st_status;

typedef struct st_poset st_poset;

const char* st_status_name(st_status status);
const char* st_last_error_message(void);
void st_text_free(char* text);

/* Poset construction and inspection. */
st_status st_poset_parse_json(const char* json_text, st_poset** out);
st_status st_poset_generate(const char* family, long param, st_poset** out);
st_status st_poset_dual(const st_poset* p, st_poset** out);
st_status st_poset_canonical_json(const st_poset* p, char** out_text);
long st_poset_size(const st_poset* p);
long st_poset_rank(const st_poset* p);
void st_poset_free(st_poset* p);

/*
  One invariant of the poset as canonical JSON. Accepted names: flag-f,
  flag-h, flag-L, cd-index, toric-f, toric-g, toric-h, st.
*/
st_status st_poset_compute(const st_poset* p, const char* what, char** out_json);

/*
  Verification suites: four-routes, structural, reflection, bases,
  dual-simplicial, table1, gessel, appendix, or all. max_n <= 0 keeps the
  default caps. out_all_pass receives 1 when every identity holds.
*/
st_status st_run_suite(const char* suite, long max_n, char** out_json, int* out_all_pass);

/* Every suite plus implementation notes, as one JSON document. */
st_status st_full_report(long max_n, char** out_json, int* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif
