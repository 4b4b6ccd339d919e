# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the submask-walk chain-count DP and the exhaustive
family sweep.  Counts run in 64-bit words; OverflowError signals the caller
to redo the computation on the unbounded pure-Python path."""

from libc.stdlib cimport calloc, free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long)


def count_chains(int n, int k, object members):
    """Strict k-chains inside the family given as a 2^n-bit membership bitset."""
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef bytes raw = members.to_bytes((size + 7) >> 3, "little")
    cdef const unsigned char * mb = raw
    cdef u64 * old = NULL
    cdef u64 * cur = NULL
    cdef u64 * tmp = NULL
    cdef Py_ssize_t * mem = NULL
    cdef Py_ssize_t cnt = 0, s, i, b, sub
    cdef int j
    cdef u64 acc, total, prev
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    if k > n + 1:
        return 0
    old = <u64 *> calloc(size, sizeof(u64))
    cur = <u64 *> calloc(size, sizeof(u64))
    mem = <Py_ssize_t *> malloc(size * sizeof(Py_ssize_t))
    if old == NULL or cur == NULL or mem == NULL:
        free(old); free(cur); free(mem)
        raise MemoryError()
    try:
        for s in range(size):
            if mb[s >> 3] & (1 << (s & 7)):
                mem[cnt] = s
                old[s] = 1
                cnt += 1
        if k == 1:
            return cnt
        for j in range(k - 1):
            for i in range(cnt):
                b = mem[i]
                acc = 0
                if b:
                    sub = (b - 1) & b
                    while True:
                        prev = acc
                        acc += old[sub]
                        if acc < prev:
                            raise OverflowError("chain count exceeds 64 bits")
                        if sub == 0:
                            break
                        sub = (sub - 1) & b
                cur[b] = acc
            tmp = old; old = cur; cur = tmp
            for i in range(cnt):
                cur[mem[i]] = 0
        total = 0
        for i in range(cnt):
            prev = total
            total += old[mem[i]]
            if total < prev:
                raise OverflowError("chain count exceeds 64 bits")
        return total
    finally:
        free(old); free(cur); free(mem)


def min_table(int n, int k):
    """Exhaustive k-chain minima over every family of every size, n <= 4.

    Returns (mins, witnesses) indexed by family size m; the witness is the
    smallest membership bitset attaining the minimum.
    """
    cdef int size, m, i, b, sub, j
    cdef unsigned long fam, famcount
    cdef u64 cnt, acc
    cdef u64 old[16]
    cdef u64 cur[16]
    cdef u64 best[17]
    cdef unsigned long bw[17]
    cdef int words[16]
    cdef int nwords
    if not 1 <= n <= 4:
        raise ValueError("exhaustive sweep supports n <= 4 only")
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    size = 1 << n
    famcount = (<unsigned long> 1) << size
    for m in range(size + 1):
        best[m] = <u64> -1
    for fam in range(famcount):
        m = __builtin_popcountll(fam)
        if k > m:
            cnt = 0
        else:
            nwords = 0
            for b in range(size):
                if (fam >> b) & 1:
                    words[nwords] = b
                    nwords += 1
                    old[b] = 1
                else:
                    old[b] = 0
            for j in range(k - 1):
                for i in range(nwords):
                    b = words[i]
                    acc = 0
                    if b:
                        sub = (b - 1) & b
                        while True:
                            acc += old[sub]
                            if sub == 0:
                                break
                            sub = (sub - 1) & b
                    cur[b] = acc
                for i in range(nwords):
                    b = words[i]
                    old[b] = cur[b]
            cnt = 0
            for i in range(nwords):
                cnt += old[words[i]]
        if cnt < best[m]:
            best[m] = cnt
            bw[m] = fam
    mins = [int(best[m]) for m in range(size + 1)]
    wits = [int(bw[m]) for m in range(size + 1)]
    return mins, wits
