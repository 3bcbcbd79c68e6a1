"""Pure-Python polynomial kernels.

A polynomial is a ``dict`` mapping an exponent tuple to a nonzero ``int``.
Exponent tuples carry no trailing zeros, so ``()`` is the constant monomial
and ``(0, 1)`` is ``x2``.  Variable indices passed in are 1-based.
"""

BACKEND = "python"


def _trim(exps):
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _pad(exps, width):
    if len(exps) >= width:
        return list(exps)
    return list(exps) + [0] * (width - len(exps))


def swap(terms, i):
    """Exchange ``x_i`` and ``x_{i+1}`` in every monomial."""
    out = {}
    for exps, c in terms.items():
        e = _pad(exps, i + 1)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[_trim(e)] = c
    return out


def divided_difference(terms, i):
    out = {}
    get = out.get
    for exps, c in terms.items():
        e = _pad(exps, i + 1)
        a = e[i - 1]
        b = e[i]
        if a == b:
            continue
        if a > b:
            sign = c
            lo, hi = b, a - 1
        else:
            sign = -c
            lo, hi = a, b - 1
        # x_i^p x_{i+1}^(lo+hi-p) for p = lo..hi
        for p in range(lo, hi + 1):
            e[i - 1] = p
            e[i] = lo + hi - p
            key = _trim(e)
            v = get(key, 0) + sign
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def multiply(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for eb, cb in b.items():
        lb = len(eb)
        for ea, ca in a.items():
            la = len(ea)
            if la >= lb:
                key = tuple([x + y for x, y in zip(ea, eb)]) + ea[lb:]
            else:
                key = tuple([x + y for x, y in zip(ea, eb)]) + eb[la:]
            v = get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def add_scaled(a, b, scale):
    """Return ``a + scale * b`` as a new dict."""
    out = dict(a)
    if not scale:
        return out
    get = out.get
    for key, c in b.items():
        v = get(key, 0) + scale * c
        if v:
            out[key] = v
        else:
            del out[key]
    return out
