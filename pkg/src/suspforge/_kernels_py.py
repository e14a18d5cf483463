"""Pure-Python enumeration kernel.

Mirrors the compiled kernel in ``_speedups``; ``suspforge.counting`` picks
whichever is available at import time.  A polynomial system over F_p arrives
pre-compiled as (coefficients, flat exponent matrix) pairs.
"""

from __future__ import annotations

BACKEND = "pure"


def count_points(p, nvars, ambient, removed=None):
    """Number of points of F_p^nvars where every ambient polynomial vanishes
    and, when ``removed`` is given, at least one removed polynomial does not.

    Each polynomial is a pair (coeffs, exps): ``coeffs[t]`` is the
    coefficient of term t reduced into [0, p), and ``exps[t*nvars + v]`` its
    exponent in variable v.
    """
    max_exp = 1
    for _, exps in list(ambient) + list(removed or []):
        if exps:
            max_exp = max(max_exp, max(exps))
    pow_table = [[pow(v, e, p) for e in range(max_exp + 1)] for v in range(p)]

    point = [0] * nvars
    count = 0
    total = p**nvars

    def vanishes(system):
        for coeffs, exps in system:
            acc = 0
            base = 0
            for c in coeffs:
                term = c
                for v in range(nvars):
                    e = exps[base + v]
                    if e:
                        term = term * pow_table[point[v]][e] % p
                base += nvars
                acc = (acc + term) % p
            if acc:
                return False
        return True

    for _ in range(total):
        if vanishes(ambient):
            if removed is None or not vanishes(removed):
                count += 1
        # odometer increment
        for v in range(nvars):
            point[v] += 1
            if point[v] < p:
                break
            point[v] = 0
    return count
