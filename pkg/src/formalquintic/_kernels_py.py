"""Pure-Python kernels for the hot arithmetic loops.

These three functions dominate the runtime of the whole verification
suite (dense truncated series products and sparse monomial-dict
products).  A Cython twin (``_kernels.pyx``) implements the identical
algorithms with C loop indices; coefficients are always exact Python
objects (gmpy2.mpq, Fraction, or cyclotomic numbers), so both backends
produce bit-identical results.
"""


def series_mul(a, b, n, zero):
    """Coefficients of the Cauchy product a*b through index n.

    ``a`` and ``b`` are coefficient lists (index = power of q); the
    result has length n+1.  ``zero`` is the additive zero of the
    coefficient ring.
    """
    la = len(a)
    lb = len(b)
    out = [zero] * (n + 1)
    for i in range(min(la, n + 1)):
        ai = a[i]
        if not ai:
            continue
        top = min(lb, n + 1 - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def series_inv(a, n, one):
    """Coefficients of 1/a through index n; a[0] must be invertible."""
    c0 = one / a[0]
    out = [c0] * (n + 1)
    la = len(a)
    for k in range(1, n + 1):
        acc = None
        for i in range(1, min(k, la - 1) + 1):
            ai = a[i]
            if ai:
                t = ai * out[k - i]
                acc = t if acc is None else acc + t
        out[k] = -c0 * acc if acc is not None else (one - one) * c0
    return out


def genpoly_mul(a, b, offsum):
    """Product of two packed-key monomial dicts.

    Keys are exponent vectors packed into a single int with a fixed
    per-field offset; packed keys add under monomial multiplication up
    to the constant ``offsum`` which must be subtracted once.
    """
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        base = ka - offsum
        for kb, cb in b.items():
            k = base + kb
            c = ca * cb
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out
