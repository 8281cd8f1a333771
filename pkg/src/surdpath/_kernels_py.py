"""Pure-Python inner loops on raw (c, d) integer state.

The compiled ``_kernels_c`` module implements the same two functions with
fixed-width integers; both must return identical results.
"""


def lpp_walk(N, c, d, max_steps):
    """Follow the left-positive path from ``(sqrt(N)+c)/d`` until it returns.

    Returns ``(cs, ds, lefts)`` with ``len(cs) == len(lefts) + 1``, or None
    when ``max_steps`` moves did not bring the walk back to its start.
    """
    c0, d0 = c, d
    cs = [c]
    ds = [d]
    lefts = []
    for _ in range(max_steps):
        s = c + d
        if s * s > N:
            r = (N - c * c) // d
            c, d = c - r, 2 * c + d - r
            lefts.append(True)
        else:
            c = s
            lefts.append(False)
        cs.append(c)
        ds.append(d)
        if c == c0 and d == d0:
            return cs, ds, lefts
    return None


def cf_walk(N, s, eps, c, d, max_terms):
    """Regular continued fraction of ``(eps*sqrt(N)+c)/d``; ``s = isqrt(N)``.

    Returns ``(terms, epss, cs, ds, period_start)`` where the i-th complete
    quotient is ``(epss[i]*sqrt(N)+cs[i])/ds[i]`` and ``period_start`` is the
    index the first repeated complete quotient points back to (-1 if none
    repeated within ``max_terms``).
    """
    seen = {}
    terms, epss, cs, ds = [], [], [], []
    for n in range(max_terms):
        key = (eps, c, d)
        if key in seen:
            return terms, epss, cs, ds, seen[key]
        seen[key] = n
        a = (s + c) // d if eps > 0 else (c - s - 1) // d
        terms.append(a)
        epss.append(eps)
        cs.append(c)
        ds.append(d)
        c1 = c - a * d
        e = (N - c1 * c1) // d
        if e > 0:
            c, d = -c1, e
        else:
            eps, c, d = -eps, c1, -e
    return terms, epss, cs, ds, -1
