#ifndef CLUTTERBETTI_H
#define CLUTTERBETTI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CbChordalMode {
  CB_CHORDAL_MODE_DELETION = 0,
  CB_CHORDAL_MODE_EMPTY_SUBCLUTTER = 1,
} CbChordalMode;

typedef enum CbField {
  CB_FIELD_RATIONALS = 0,
  // Uses the accompanying prime.
  CB_FIELD_PRIME_FIELD = 1,
  CB_FIELD_INTEGERS = 2,
} CbField;

typedef enum CbStatus {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_UTF8 = 2,
  CB_STATUS_PARSE = 3,
  CB_STATUS_INVALID_INPUT = 4,
  CB_STATUS_TOO_LARGE = 5,
  // A search proved that no witness exists.
  CB_STATUS_REFUTED = 6,
  // A search ran out of budget.
  CB_STATUS_UNKNOWN = 7,
  CB_STATUS_INTERNAL = 8,
} CbStatus;

typedef struct CbBettiTable CbBettiTable;

typedef struct CbClutter CbClutter;

typedef struct CbIdeal CbIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Description of the last failure on this thread, or NULL. Owned by the
// library; valid until the next call on this thread.
const char *cb_last_error(void);

// Parses the text or JSON clutter format.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum CbStatus cb_clutter_parse(const char *text, struct CbClutter **out);

// Loads a named clutter fixture, or the facet clutter of a pure complex fixture.
//
// # Safety
// `name` is a NUL-terminated string; `out` is writable.
enum CbStatus cb_clutter_from_fixture(const char *name, struct CbClutter **out);

// # Safety
// `c` is NULL or a handle from this library not yet freed.
void cb_clutter_free(struct CbClutter *c);

// # Safety
// `c` is a live clutter handle.
uint32_t cb_clutter_n(const struct CbClutter *c);

// # Safety
// `c` is a live clutter handle.
size_t cb_clutter_d(const struct CbClutter *c);

// Number of circuits.
//
// # Safety
// `c` is a live clutter handle.
size_t cb_clutter_len(const struct CbClutter *c);

// The ideal generated by the `d`-sets that are not circuits.
//
// # Safety
// `c` is a live clutter handle; `out` is writable.
enum CbStatus cb_clutter_complement_ideal(const struct CbClutter *c, struct CbIdeal **out);

// Simplicial-order search. On `Ok`, `steps` receives the order's length.
//
// # Safety
// `c` is a live clutter handle; `steps` is NULL or writable.
enum CbStatus cb_clutter_chordal(const struct CbClutter *c,
                                 enum CbChordalMode mode,
                                 size_t budget,
                                 size_t *steps);

// Parses the text or JSON ideal format.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum CbStatus cb_ideal_parse(const char *text, struct CbIdeal **out);

// # Safety
// `i` is NULL or a handle from this library not yet freed.
void cb_ideal_free(struct CbIdeal *i);

// # Safety
// `i` is a live ideal handle.
size_t cb_ideal_num_generators(const struct CbIdeal *i);

// Full multigraded table. `prime` is read only for `CB_FIELD_PRIME_FIELD`.
//
// # Safety
// `i` is a live ideal handle; `out` is writable.
enum CbStatus cb_betti_table(const struct CbIdeal *i,
                             enum CbField field,
                             uint64_t prime,
                             struct CbBettiTable **out);

// # Safety
// `t` is NULL or a handle from this library not yet freed.
void cb_betti_free(struct CbBettiTable *t);

// `β_{i,W}` with `W` given as a bitmask (vertex `v` is bit `v-1`).
//
// # Safety
// `t` is a live table handle.
uint64_t cb_betti_get(const struct CbBettiTable *t, size_t i, uint64_t w);

// Graded `β_{i,j}`.
//
// # Safety
// `t` is a live table handle.
uint64_t cb_betti_graded(const struct CbBettiTable *t, size_t i, size_t j);

// Regularity of the ideal, or -1 for the zero ideal.
//
// # Safety
// `t` is a live table handle.
int64_t cb_betti_reg(const struct CbBettiTable *t);

// Projective dimension of the quotient ring.
//
// # Safety
// `t` is a live table handle.
size_t cb_betti_pd_quotient(const struct CbBettiTable *t);

// JSON `(i, W, count)` listing; release with [`cb_string_free`].
//
// # Safety
// `t` is a live table handle; `out` is writable.
enum CbStatus cb_betti_to_json(const struct CbBettiTable *t, char **out);

// # Safety
// `s` is NULL or a string returned by this library not yet freed.
void cb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUTTERBETTI_H */
