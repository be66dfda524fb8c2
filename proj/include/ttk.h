#ifndef TTK_H
#define TTK_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TTK_API __declspec(dllexport)
#else
#define TTK_API __attribute__((visibility("default")))
#endif

typedef struct ttk_track ttk_track;
typedef struct ttk_cycle ttk_cycle;
typedef struct ttk_complex ttk_complex;

typedef enum ttk_status {
  TTK_OK = 0,
  TTK_ERR_DOMAIN = 1,
  TTK_ERR_INPUT = 2,
  TTK_ERR_INTERNAL = 3
} ttk_status;

typedef enum ttk_support_method { TTK_SUPPORT_TANGENT = 0, TTK_SUPPORT_POINTS = 1, TTK_SUPPORT_BOTH = 2 } ttk_support_method;

/* Strings returned through char** are owned by the caller; release them with ttk_string_free. */
TTK_API const char* ttk_version(void);
/* Message of the last failed call on this thread, "" if none. */
TTK_API const char* ttk_last_error(void);
/* Error code name of the last failed call on this thread, e.g. "NotFilling". */
TTK_API const char* ttk_last_error_code(void);
TTK_API void ttk_string_free(char* s);
TTK_API void ttk_set_threads(int n);

TTK_API ttk_status ttk_track_parse(const char* text, ttk_track** out);
TTK_API void ttk_track_free(ttk_track* t);
TTK_API ttk_status ttk_track_write(const ttk_track* t, char** out);
/* ok is set to 1 when every validity flag passes. */
TTK_API ttk_status ttk_track_validate(const ttk_track* t, int* ok, char** report);
/* Splits a large branch by name using the track's measure. event gets "branch:Case". */
TTK_API ttk_status ttk_track_split(const ttk_track* t, const char* branch, ttk_track** out, char** event);
TTK_API ttk_status ttk_track_maximal_split(const ttk_track* t, ttk_track** out, char** events);

TTK_API ttk_status ttk_cycle_find(const ttk_track* t, int max_iters, ttk_cycle** out);
TTK_API ttk_status ttk_cycle_parse(const char* text, ttk_cycle** out);
TTK_API void ttk_cycle_free(ttk_cycle* c);
TTK_API ttk_status ttk_cycle_write(const ttk_cycle* c, char** out);
/* Preperiod and period. */
TTK_API ttk_status ttk_cycle_shape(const ttk_cycle* c, int* n, int* m);
/* structured != 0 gives the JSON form. */
TTK_API ttk_status ttk_cycle_bounds(const ttk_cycle* c, int structured, char** report);
/* sigma may be NULL or empty for the default mark. h1 gets the capped action with trace and determinant. */
TTK_API ttk_status ttk_cycle_factorize(const ttk_cycle* c, const char* sigma, char** sequence, char** h1);

/* bound_report may be NULL; otherwise the text written by ttk_cycle_bounds. */
TTK_API ttk_status ttk_heegaard(const ttk_track* t, const char* basis, const char* sigma, const char* bound_report,
                                int enumerate, char** out);

TTK_API ttk_status ttk_complex_parse(const char* text, ttk_complex** out);
TTK_API void ttk_complex_free(ttk_complex* c);
TTK_API ttk_status ttk_complex_support(const ttk_complex* c, int k_max, ttk_support_method method, int* dim,
                                       char** report);

#ifdef __cplusplus
}
#endif

#endif
