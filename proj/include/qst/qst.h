/* C interface for the quantum state transfer simulator.
 *
 * All functions return qst_status; QST_OK means success.  On failure
 * qst_last_error() returns a thread-local description of what went wrong.
 * Configurations are opaque handles; reports and sweep specs are plain
 * structs the caller owns.
 */
#ifndef QST_H
#define QST_H

#include <stddef.h>

#ifdef _WIN32
#define QST_API __declspec(dllexport)
#else
#define QST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qst_status {
    QST_OK = 0,
    QST_ERR_INVALID_ARGUMENT = 1,
    QST_ERR_OUT_OF_RANGE = 2,
    QST_ERR_NON_ADJACENT = 3,
    QST_ERR_INVALID_EPSILON = 4,
    QST_ERR_BAD_PARITY = 5,
    QST_ERR_DEGENERATE_SIZE = 6,
    QST_ERR_INVALID_CONFIG = 7,
    QST_ERR_SPEC_MISMATCH = 8,
    QST_ERR_DIMENSION_MISMATCH = 9,
    QST_ERR_UNSUPPORTED_BASIS = 10,
    QST_ERR_IO = 11,
    QST_ERR_INTERNAL = 12,
    QST_ERR_BUFFER_TOO_SMALL = 13
} qst_status;

typedef enum qst_backend {
    QST_BACKEND_FULL = 0,
    QST_BACKEND_SUBSPACE = 1,
    QST_BACKEND_BOTH = 2
} qst_backend;

typedef enum qst_pairing {
    QST_PAIRING_BOX = 0,
    QST_PAIRING_THEOREM = 1
} qst_pairing;

typedef enum qst_case {
    QST_CASE_SAME_PARTITION = 0,
    QST_CASE_DIFF_PARTITION = 1
} qst_case;

typedef enum qst_sweep_case {
    QST_SWEEP_SAME = 0,
    QST_SWEEP_DIFF = 1,
    QST_SWEEP_BOTH = 2
} qst_sweep_case;

typedef enum qst_verify_level {
    QST_VERIFY_FAST = 0,
    QST_VERIFY_FULL = 1
} qst_verify_level;

typedef struct qst_config qst_config;

typedef struct qst_report {
    int transfer_case; /* qst_case */
    int m;
    int n;
    int sender;
    int receiver;
    double eps1;
    double eps2;
    int h1;
    int h2;
    double f1;
    double f2;
    double fidelity;
    double bound;
    int bound_satisfied;
    double t2_norm_sq;
    double backend_disagreement;
} qst_report;

typedef struct qst_sweep_spec {
    int m_lo;
    int m_hi;
    int n_lo;
    int n_hi;
    double eps1;
    double eps2;
    int cases;   /* qst_sweep_case */
    int backend; /* qst_backend */
    int pairing; /* qst_pairing */
    double free_angle;
    int threads; /* 0 = automatic */
} qst_sweep_spec;

typedef struct qst_suite_result {
    char name[64];
    char detail[192];
    double max_residual;
    double tolerance;
    int pass;
} qst_suite_result;

QST_API const char* qst_version(void);
QST_API const char* qst_status_name(qst_status status);

/* Thread-local message for the most recent failure on this thread. */
QST_API const char* qst_last_error(void);

QST_API qst_config* qst_config_create(void);
QST_API void qst_config_destroy(qst_config* cfg);

QST_API qst_status qst_config_set_graph(qst_config* cfg, int m, int n);
QST_API qst_status qst_config_set_endpoints(qst_config* cfg, int sender, int receiver);
QST_API qst_status qst_config_set_epsilons(qst_config* cfg, double eps1, double eps2);
QST_API qst_status qst_config_set_backend(qst_config* cfg, qst_backend backend);
QST_API qst_status qst_config_set_pairing(qst_config* cfg, qst_pairing pairing);
QST_API qst_status qst_config_set_free_angle(qst_config* cfg, double angle);
/* h1/h2 of 0 derive the step counts from the epsilons. */
QST_API qst_status qst_config_set_steps(qst_config* cfg, int h1, int h2);
/* Path for a CSV dump of the final state; NULL disables the dump. */
QST_API qst_status qst_config_set_state_dump(qst_config* cfg, const char* path);

QST_API qst_status qst_run(const qst_config* cfg, qst_report* report);

QST_API const char* qst_report_csv_header(void);
QST_API qst_status qst_report_to_csv(const qst_report* report, char* buf, size_t cap);

/* Writes one CSV per swept case.  QST_SWEEP_BOTH derives per-case file
 * names from out_path by inserting _same/_diff before the extension. */
QST_API qst_status qst_sweep(const qst_sweep_spec* spec, const char* out_path);

/* Two-call pattern: pass results = NULL to receive the suite count in
 * n_written, then call again with a buffer of at least that capacity. */
QST_API qst_status qst_verify(qst_verify_level level, qst_suite_result* results,
                              size_t cap, size_t* n_written, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QST_H */
