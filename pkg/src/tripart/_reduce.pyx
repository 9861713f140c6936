# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled exhaustive column reduction over packed 64-bit words.

Columns are packed little-endian: bit i of column j lives in word i >> 6
of row j of the array, at in-word position i & 63.
"""

cdef extern from *:
    """
    static inline int hibit64(unsigned long long x) {
        return 63 - __builtin_clzll(x);
    }
    """
    int hibit64(unsigned long long x) nogil

ctypedef unsigned long long u64


def exhaustive_reduce(u64[:, ::1] cols, u64[:, ::1] aux,
                      long long[::1] lows, long long[::1] pivot_of_row):
    """Reduce packed columns left to right in place, mirroring XORs on aux.

    Fills ``lows`` with the per-column lows (-1 for zero columns) and uses
    ``pivot_of_row`` (all -1 on entry) as the row -> pivot-column map.
    """
    cdef Py_ssize_t n = cols.shape[0]
    cdef Py_ssize_t nwords = cols.shape[1]
    cdef Py_ssize_t j, wi, t
    cdef long long low, row, src
    cdef int b
    cdef u64 word, below

    if n == 0:
        return

    with nogil:
        for j in range(n):
            low = -1
            wi = nwords - 1
            word = cols[j, wi]
            while True:
                if word == 0:
                    wi -= 1
                    if wi < 0:
                        break
                    word = cols[j, wi]
                    continue
                b = hibit64(word)
                row = (wi << 6) + b
                below = ((<u64>1) << b) - 1
                src = pivot_of_row[row]
                if src >= 0:
                    # The pivot column has no bits above `row`, so only
                    # words 0..wi of this column can change.
                    for t in range(wi + 1):
                        cols[j, t] ^= cols[src, t]
                    for t in range(nwords):
                        aux[j, t] ^= aux[src, t]
                    word = cols[j, wi] & below
                else:
                    # First surviving bit seen from the top is the final low:
                    # later XORs only touch strictly lower rows.
                    if low < 0:
                        low = row
                    word &= below
            lows[j] = low
            if low >= 0:
                pivot_of_row[low] = j
