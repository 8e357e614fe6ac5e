/* barrier.h: C interface to the barrier-coverage restoration library.
 *
 * A barrier is the segment [0, L]; n sensors of identical range r sit at
 * sorted positions on it. A robot starting at 0 relocates sensors so that
 * their ranges cover the whole segment, and the library computes optimal
 * offline trajectories, competitive online trajectories, adversarial
 * inputs, and simulation reports for it.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return BC_OK or an error code; bc_last_error_message() gives
 * the message for the most recent failure on the calling thread. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with bc_string_free().
 */

#ifndef BARRIER_BARRIER_H
#define BARRIER_BARRIER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BC_API __declspec(dllexport)
#else
#define BC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bc_status {
    BC_OK = 0,
    BC_ERR_INVALID_ARGUMENT = 1,
    BC_ERR_NONPOSITIVE_RANGE = 2,
    BC_ERR_INFEASIBLE_COVERAGE = 3,
    BC_ERR_POSITION_OUT_OF_RANGE = 4,
    BC_ERR_TOO_LARGE = 5,
    BC_ERR_DEGENERATE_LENGTH = 6,
    BC_ERR_PARSE = 7,
    BC_ERR_IO = 8,
    BC_ERR_INTERNAL = 9
} bc_status;

typedef struct bc_instance bc_instance;
typedef struct bc_trajectory bc_trajectory;
typedef struct bc_report bc_report;
typedef struct bc_online_run bc_online_run;

/* ---- diagnostics ---- */

BC_API const char* bc_last_error_message(void);
BC_API void bc_string_free(char* s);

/* Absolute tolerance for sign/equality tests (default 1e-9). Set once at
 * startup; not synchronized against concurrent solver calls. */
BC_API double bc_epsilon(void);
BC_API bc_status bc_set_epsilon(double eps);

/* ---- instances ---- */

BC_API bc_status bc_instance_create(double length, double range, const double* positions,
                                    size_t n, bc_instance** out);
BC_API bc_status bc_instance_from_json(const char* text, bc_instance** out);
BC_API bc_status bc_instance_to_json(const bc_instance* inst, char** out);
BC_API void bc_instance_free(bc_instance* inst);

BC_API size_t bc_instance_size(const bc_instance* inst);
BC_API double bc_instance_length(const bc_instance* inst);
BC_API double bc_instance_range(const bc_instance* inst);
/* Copies min(n, capacity) sorted positions into buf; returns n. */
BC_API size_t bc_instance_positions(const bc_instance* inst, double* buf, size_t capacity);

/* Maximal uncovered subintervals, written as lo/hi pairs (2 doubles per
 * gap). Returns the gap count; fills min(count, capacity) pairs. */
BC_API size_t bc_compute_gaps(const bc_instance* inst, double* lohi, size_t capacity);

/* Coverage balances (2ri - r) - x_i; buf must hold bc_instance_size
 * doubles. */
BC_API bc_status bc_coverage_balances(const bc_instance* inst, double* buf);

/* ---- trajectories ---- */

BC_API bc_status bc_trajectory_create(const double* points, size_t n, bc_trajectory** out);
BC_API bc_status bc_trajectory_from_json(const char* text, bc_trajectory** out);
BC_API bc_status bc_trajectory_to_json(const bc_trajectory* t, char** out);
BC_API void bc_trajectory_free(bc_trajectory* t);

BC_API double bc_trajectory_length(const bc_trajectory* t);
/* Flat point list [t0, t1, ..., tm]; returns the point count. */
BC_API size_t bc_trajectory_points(const bc_trajectory* t, double* buf, size_t capacity);

/* ---- solvers ---- */

BC_API bc_status bc_solve_offline(const bc_instance* inst, bc_trajectory** out);

/* algo: "adaptive" | "triple-always" | "fixed-switch" | "greedy-double".
 * switch_point < 0 selects the default 2L/3. hide_length runs the
 * unknown-length model (required false for adaptive/fixed-switch). */
BC_API bc_status bc_solve_online(const bc_instance* inst, const char* algo, int hide_length,
                                 double switch_point, bc_online_run** out);
BC_API void bc_online_run_free(bc_online_run* run);
BC_API const bc_trajectory* bc_online_run_trajectory(const bc_online_run* run);
BC_API size_t bc_online_run_triples(const bc_online_run* run);
BC_API size_t bc_online_run_epochs(const bc_online_run* run);
BC_API double bc_online_run_walk_drift(const bc_online_run* run);

/* Exhaustive optimum for small instances (error BC_ERR_TOO_LARGE when the
 * instance exceeds max_n sensors; pass 0 for the default of 12). */
BC_API bc_status bc_oracle_optimal(const bc_instance* inst, size_t max_n, bc_trajectory** out);

/* ---- simulation ---- */

BC_API bc_status bc_execute_trajectory(const bc_instance* inst, const bc_trajectory* t,
                                       bc_report** out);
BC_API void bc_report_free(bc_report* rep);
BC_API int bc_report_covered(const bc_report* rep);
BC_API int bc_report_order_preserved(const bc_report* rep);
BC_API double bc_report_length(const bc_report* rep);
BC_API int bc_report_max_visits(const bc_report* rep);
BC_API size_t bc_report_final_positions(const bc_report* rep, double* buf, size_t capacity);

BC_API bc_status bc_verify_three_visits(const bc_trajectory* t, int* max_interior,
                                        int* terminal_visits);
/* 1 when the trajectory decomposes into triples/straight runs ending in a
 * straight run or one double, 0 otherwise. */
BC_API int bc_verify_shape(const bc_trajectory* t);

/* ---- generators ---- */

BC_API bc_status bc_gen_random_instance(size_t n, double length, double range, uint64_t seed,
                                        int require_end_gap, bc_instance** out);
/* Adaptive lower-bound constructions: the instance materialized against
 * the named algorithm, plus the achieved online/offline ratio. */
BC_API bc_status bc_adversary_known_length(double length, const char* algo, bc_instance** out,
                                           double* ratio);
BC_API bc_status bc_adversary_unknown_length(int stack, double range, double delta,
                                             const char* algo, bc_instance** out, double* ratio);
BC_API bc_status bc_adversary_fixed_switch(double switch_point, double length, double range,
                                           bc_instance** out);

/* ---- experiments ---- */

/* Competitive benchmark over `random_instances` end-gap instances plus the
 * adversary families; the result is the CSV table
 * instance_id,algo,n,L,r,online_len,offline_len,ratio,triples,epochs,ms.
 * max_ratio_out (optional) receives the worst ratio observed. */
BC_API bc_status bc_bench_competitive(size_t random_instances, uint64_t seed, char** csv_out,
                                      double* max_ratio_out);

/* Median offline-solve time for each size; CSV n,median_ms. */
BC_API bc_status bc_measure_scaling(const size_t* sizes, size_t count, int trials, uint64_t seed,
                                    char** csv_out);

BC_API bc_status bc_render_svg(const bc_instance* inst, const bc_trajectory* t, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* BARRIER_BARRIER_H */
