/*
 * wythoff — exact Beatty-pair sequences and solvers for restricted
 * m-Wythoff Nim variants, exposed as a C API over the C++ core.
 *
 * All functions return a wythoff_status; results travel through out
 * parameters. Objects created by *_create/_solve calls are released with the
 * matching *_destroy. Handles are opaque and never shared between threads
 * while being mutated; everything here is immutable after creation, so
 * concurrent reads are safe.
 */
#ifndef WYTHOFF_H
#define WYTHOFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WYTHOFF_API __declspec(dllexport)
#else
#define WYTHOFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wythoff_status {
    WYTHOFF_OK = 0,
    WYTHOFF_ERROR_NULL_POINTER = 1,
    WYTHOFF_ERROR_INVALID_ARGUMENT = 2,
    WYTHOFF_ERROR_OUT_OF_RANGE = 3,
    WYTHOFF_ERROR_BUFFER_TOO_SMALL = 4,
    WYTHOFF_ERROR_OVERFLOW = 5,
    WYTHOFF_ERROR_INTERNAL = 6
} wythoff_status;

WYTHOFF_API const char* wythoff_status_message(wythoff_status status);
WYTHOFF_API const char* wythoff_version(void);

/* ------------------------------------------------------------------ */
/* Closed-form sequences                                               */
/* ------------------------------------------------------------------ */

/* a_n = floor(n*phi_{mp}/p), b_n = floor(n*(phi_{mp}+mp)/p), computed in
 * exact arithmetic; b_n - a_n = m*n. */
WYTHOFF_API wythoff_status wythoff_beatty_a(uint32_t m, uint32_t p, uint64_t n, uint64_t* out);
WYTHOFF_API wythoff_status wythoff_beatty_b(uint32_t m, uint32_t p, uint64_t n, uint64_t* out);

/* phi_n = p*b_n - n, the index with a_{phi_n} = b_n - 1. */
WYTHOFF_API wythoff_status wythoff_phi_index(uint32_t m, uint32_t p, uint64_t n, uint64_t* out);

/* ------------------------------------------------------------------ */
/* Game variants                                                       */
/* ------------------------------------------------------------------ */

typedef enum wythoff_game_kind {
    WYTHOFF_GAME_BLOCKING = 0,       /* uses m, p */
    WYTHOFF_GAME_BLOCKING_L = 1,     /* uses m, p, l */
    WYTHOFF_GAME_MODULO = 2,         /* uses m, p, l (0 <= l <= p) */
    WYTHOFF_GAME_SHIFTED = 3,        /* uses m, p, l (0 <= l < p) */
    WYTHOFF_GAME_SHIFTED_CHOICE = 4, /* uses m, p */
    WYTHOFF_GAME_SHIFTED_RECT = 5    /* uses m, p, u, v */
} wythoff_game_kind;

typedef struct wythoff_variant wythoff_variant;

WYTHOFF_API wythoff_status wythoff_variant_create(wythoff_game_kind kind, uint32_t m,
                                                  uint32_t p, uint32_t l, uint32_t u,
                                                  uint32_t v, wythoff_variant** out);
WYTHOFF_API void wythoff_variant_destroy(wythoff_variant* variant);

/* 1 when (x, y) is on the board, 0 when it lies inside the cut rectangle. */
WYTHOFF_API wythoff_status wythoff_variant_on_board(const wythoff_variant* variant, uint32_t x,
                                                    uint32_t y, int* out);

typedef struct wythoff_move {
    uint32_t to_x, to_y;   /* target position */
    uint32_t take_x, take_y; /* tokens removed from each pile */
    uint8_t is_rook_class; /* 0 = compound (bishop-type), 1 = single-pile */
    uint8_t blockable;     /* may be announced forbidden in blocking games */
} wythoff_move;

/* Writes the full option set of (x, y), sorted by target. *count always
 * receives the total; WYTHOFF_ERROR_BUFFER_TOO_SMALL is returned when
 * capacity is insufficient (buffer may be NULL with capacity 0 to size). */
WYTHOFF_API wythoff_status wythoff_variant_options(const wythoff_variant* variant, uint32_t x,
                                                   uint32_t y, wythoff_move* buffer,
                                                   size_t capacity, size_t* count);

/* ------------------------------------------------------------------ */
/* Solving                                                             */
/* ------------------------------------------------------------------ */

typedef struct wythoff_table wythoff_table;

typedef enum wythoff_outcome {
    WYTHOFF_OUTCOME_N = 0,
    WYTHOFF_OUTCOME_P = 1,
    WYTHOFF_OUTCOME_OFF_BOARD = 2
} wythoff_outcome;

/* Retrograde solve of every position in [0, bound]^2. */
WYTHOFF_API wythoff_status wythoff_solve(const wythoff_variant* variant, uint32_t bound,
                                         wythoff_table** out);
WYTHOFF_API void wythoff_table_destroy(wythoff_table* table);
WYTHOFF_API wythoff_status wythoff_table_bound(const wythoff_table* table, uint32_t* out);
WYTHOFF_API wythoff_status wythoff_table_outcome(const wythoff_table* table, uint32_t x,
                                                 uint32_t y, wythoff_outcome* out);

typedef struct wythoff_solution_row {
    uint64_t n;
    uint32_t c, d; /* unordered P-pair {c, d} with c <= d, sorted by d */
} wythoff_solution_row;

WYTHOFF_API wythoff_status wythoff_table_extract(const wythoff_table* table,
                                                 wythoff_solution_row* buffer, size_t capacity,
                                                 size_t* count, int* d_strictly_increasing);

typedef enum wythoff_advice_kind {
    WYTHOFF_ADVICE_WINNING_MOVE = 0,    /* play `move` */
    WYTHOFF_ADVICE_BLOCKED_WIN = 1,     /* block set too large; survivors listed */
    WYTHOFF_ADVICE_ANNOUNCE_BLOCKS = 2, /* P position: blocks to declare are listed */
    WYTHOFF_ADVICE_NO_WINNING_MOVE = 3, /* P position, nothing to recommend */
    WYTHOFF_ADVICE_CHOOSE_L = 4         /* shifted-choice: fix l = choose_l */
} wythoff_advice_kind;

typedef struct wythoff_advice {
    int kind; /* wythoff_advice_kind */
    wythoff_move move;
    uint32_t choose_l;
} wythoff_advice;

/* Optimal-play advice at (x, y). The move list accompanying BLOCKED_WIN and
 * ANNOUNCE_BLOCKS is written to set_buffer (same buffer protocol as
 * wythoff_variant_options). */
WYTHOFF_API wythoff_status wythoff_advise(const wythoff_table* table, uint32_t x, uint32_t y,
                                          wythoff_advice* advice, wythoff_move* set_buffer,
                                          size_t capacity, size_t* set_count);

/* ------------------------------------------------------------------ */
/* Exploration and verification                                         */
/* ------------------------------------------------------------------ */

typedef struct wythoff_exploration {
    int dc_is_arithmetic;        /* whether d_n - c_n is an arithmetic progression */
    uint64_t ap_first_violation; /* first violating row when it is not */
    int census_pass;             /* p-complementarity of c (from 0) and d (from 1) */
    int64_t census_hi;           /* top of the census window, -1 when empty */
    char note[128];              /* reconciliation note for published tables, or "" */
} wythoff_exploration;

WYTHOFF_API wythoff_status wythoff_explore(const wythoff_table* table,
                                           wythoff_exploration* out);

typedef enum wythoff_suite {
    WYTHOFF_SUITE_MAIN_THEOREM = 0,
    WYTHOFF_SUITE_LEMMAS = 1,
    WYTHOFF_SUITE_MEX = 2,
    WYTHOFF_SUITE_FIGURES = 3,
    WYTHOFF_SUITE_ALL = 4
} wythoff_suite;

typedef enum wythoff_report_format {
    WYTHOFF_REPORT_KV = 0,  /* one key=value record per check */
    WYTHOFF_REPORT_JSON = 1
} wythoff_report_format;

/* Runs a verification suite and hands back the serialized report (free with
 * wythoff_string_free). *all_pass is 1 iff every check passed. `bound` is the
 * board bound for main-theorem/figures and the index bound for lemmas/mex. */
WYTHOFF_API wythoff_status wythoff_verify_run(wythoff_suite suite, uint32_t m, uint32_t p,
                                              uint64_t bound, wythoff_report_format format,
                                              char** report, int* all_pass);
WYTHOFF_API void wythoff_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WYTHOFF_H */
