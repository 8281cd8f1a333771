# cython: language_level=3, boundscheck=False, wraparound=False
"""Fixed-width versions of the ``_kernels_py`` loops.

All state lives in C ``long long``.  Inputs and every intermediate (c, d)
are kept below 2**30 in magnitude so the squares and products in the
recurrences stay under 2**63; anything larger raises OverflowError and the
caller retries on the unbounded Python path.
"""

cdef long long LIMIT = 1073741824  # 2**30


cdef inline void _check(long long v) except *:
    if v >= LIMIT or v <= -LIMIT:
        raise OverflowError("value left the fixed-width range")


def lpp_walk(N_, c_, d_, max_steps_):
    if N_ >= LIMIT or abs(c_) >= LIMIT or d_ >= LIMIT:
        raise OverflowError("input outside the fixed-width range")
    cdef long long N = N_, c = c_, d = d_, c0 = c_, d0 = d_
    cdef long long s, r
    cdef long long max_steps = max_steps_, i
    cs = [c]
    ds = [d]
    lefts = []
    for i in range(max_steps):
        s = c + d
        if s * s > N:
            r = (N - c * c) // d
            c, d = c - r, 2 * c + d - r
            lefts.append(True)
        else:
            c = s
            lefts.append(False)
        _check(c)
        _check(d)
        cs.append(c)
        ds.append(d)
        if c == c0 and d == d0:
            return cs, ds, lefts
    return None


cdef inline long long _floordiv(long long a, long long b):
    # cdivision is off, so // floors like Python
    return a // b


def cf_walk(N_, s_, eps_, c_, d_, max_terms_):
    if N_ >= LIMIT or abs(c_) >= LIMIT or d_ >= LIMIT:
        raise OverflowError("input outside the fixed-width range")
    cdef long long N = N_, s = s_, c = c_, d = d_, a, c1, e
    cdef int eps = eps_
    cdef long long n, max_terms = max_terms_
    seen = {}
    terms, epss, cs, ds = [], [], [], []
    for n in range(max_terms):
        key = (c * LIMIT + d) * 2 + (eps > 0)
        prev = seen.get(key)
        if prev is not None:
            return terms, epss, cs, ds, prev
        seen[key] = n
        if eps > 0:
            a = _floordiv(s + c, d)
        else:
            a = _floordiv(c - s - 1, d)
        terms.append(a)
        epss.append(eps)
        cs.append(c)
        ds.append(d)
        c1 = c - a * d
        _check(c1)
        e = _floordiv(N - c1 * c1, d)
        if e > 0:
            c, d = -c1, e
        else:
            eps, c, d = -eps, c1, -e
        _check(d)
    return terms, epss, cs, ds, -1
