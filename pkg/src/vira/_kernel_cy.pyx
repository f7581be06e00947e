# cython: language_level=3
"""Straightening and module-action kernel, compiled twin.

Keep this in sync with ``_kernel_py.py``: same functions, same data
model, same results.  ``vira.kernel`` prefers this module when the
extension built; ``VIRA_PURE=1`` forces the pure twin.  Coefficients
stay exact (``fractions.Fraction``); the compiled win comes from the
tuple/dict traffic in the straightening recursion and the action loops.
"""

from bisect import bisect_right
from fractions import Fraction

IMPL = "cython"

_ONE = Fraction(1)

_straighten_cache = {}


def cache_clear():
    _straighten_cache.clear()


def cache_size():
    return len(_straighten_cache)


def central_coefficient(k):
    """Coefficient of z in the bracket of d_k with d_{-k}: (k^3 - k)/12."""
    return Fraction(k * k * k - k, 12)


def straighten_word(tuple word):
    """Normal form of the product d_{word[0]} ... d_{word[-1]}.

    Returns ``{(extra_z_power, sorted_word): coefficient}``.
    """
    cached = _straighten_cache.get(word)
    if cached is not None:
        return cached
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t inv = -1
    cdef Py_ssize_t i
    for i in range(n - 1):
        if word[i] > word[i + 1]:
            inv = i
            break
    cdef dict result
    if inv < 0:
        result = {(0, word): _ONE}
        _straighten_cache[word] = result
        return result
    a = word[inv]
    b = word[inv + 1]
    head = word[:inv]
    tail = word[inv + 2:]
    cdef dict acc = {}
    for key, c in straighten_word(head + (b, a) + tail).items():
        cur = acc.get(key)
        acc[key] = c if cur is None else cur + c
    scale = Fraction(b - a)
    for key, c in straighten_word(head + (a + b,) + tail).items():
        cur = acc.get(key)
        acc[key] = scale * c if cur is None else cur + scale * c
    if b == -a:
        cc = central_coefficient(a)
        if cc:
            for (dz, w), c in straighten_word(head + tail).items():
                key = (dz + 1, w)
                cur = acc.get(key)
                acc[key] = cc * c if cur is None else cur + cc * c
    result = {key: c for key, c in acc.items() if c}
    _straighten_cache[word] = result
    return result


def multiply_terms(dict a, dict b):
    """Product of two UEA term maps, straightened into normal form."""
    cdef dict out = {}
    for (ta, wa), ca in a.items():
        for (tb, wb), cb in b.items():
            c0 = ca * cb
            t0 = ta + tb
            for (dz, w), c in straighten_word(wa + wb).items():
                key = (t0 + dz, w)
                cur = out.get(key)
                out[key] = c0 * c if cur is None else cur + c0 * c
    return {key: c for key, c in out.items() if c}


def act_terms(dict u_terms, dict v_terms, psi1, psi2):
    """Action of a UEA term map on a module term map, in the universal
    module (no z-power reduction).

    Trailing positive modes of each straightened word act on the cyclic
    vector through psi: d_1 -> psi1, d_2 -> psi2, d_n -> 0 for n >= 3.
    """
    cdef dict out = {}
    cdef Py_ssize_t cut, wlen, idx
    cdef bint dead
    for (tu, wu), cu in u_terms.items():
        for (tv, parts), cv in v_terms.items():
            c0 = cu * cv
            t0 = tu + tv
            nword = wu + tuple(-k for k in reversed(parts))
            for (dz, w), c in straighten_word(nword).items():
                wlen = len(w)
                cut = bisect_right(w, 0)
                coeff = c0 * c
                dead = False
                for idx in range(cut, wlen):
                    j = w[idx]
                    if j == 1:
                        coeff = coeff * psi1
                    elif j == 2:
                        coeff = coeff * psi2
                    else:
                        dead = True
                        break
                if dead:
                    continue
                key = (t0 + dz, tuple(-i for i in reversed(w[:cut])))
                cur = out.get(key)
                out[key] = coeff if cur is None else cur + coeff
    return {key: c for key, c in out.items() if c}
