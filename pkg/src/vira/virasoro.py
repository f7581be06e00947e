"""The Virasoro algebra and its universal enveloping algebra.

Generators are d_k for k in Z together with a central element z; the
bracket is

    [d_a, d_b] = (b - a) d_{a+b} + delta_{b,-a} (a^3 - a)/12 z.

A PBW monomial is z^t d_{i_1} ... d_{i_s} with i_1 <= ... <= i_s (z is
central, so all z-powers are collected in front).  ``UEAElement`` holds a
finite rational combination of PBW monomials; products are normalized by
straightening in the kernel.  Sign conventions: subalgebra membership is
read off the indices (negative modes, d_0 and z, positive modes), so no
dedicated subalgebra types exist.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import kernel
from .scalar import join_terms, to_rational


class PBWMonomial(NamedTuple):
    """z^z_power d_{word[0]} ... d_{word[-1]} with a non-decreasing word."""

    z_power: int
    word: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.word)


def weight(monomial) -> int:
    """Adjoint weight of a PBW monomial: the sum of its word indices
    (z contributes 0)."""
    _, word = monomial
    return sum(word)


def _term_sort_key(item):
    (t, word), _ = item
    return (sum(word), -len(word), word, t)


def _render_word(word) -> list[str]:
    factors = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        e = j - i
        factors.append(f"d{word[i]}" if e == 1 else f"d{word[i]}^{e}")
        i = j
    return factors


class UEAElement:
    """Element of the universal enveloping algebra in PBW normal form."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (t, word), coeff in items:
                c = to_rational(coeff)
                if not c:
                    continue
                t = int(t)
                word = tuple(int(i) for i in word)
                if t < 0:
                    raise ValueError("z powers must be non-negative")
                if any(word[i] > word[i + 1] for i in range(len(word) - 1)):
                    raise ValueError(
                        "PBW words must be non-decreasing; use straighten()"
                    )
                key = (t, word)
                cur = data.get(key)
                total = c if cur is None else cur + c
                if total:
                    data[key] = total
                else:
                    data.pop(key, None)
        self._terms = data

    @classmethod
    def _raw(cls, data: dict) -> "UEAElement":
        # Internal: data already normalized (normal-form keys, no zeros).
        elem = cls.__new__(cls)
        elem._terms = data
        return elem

    @classmethod
    def zero(cls) -> "UEAElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "UEAElement":
        return cls._raw({(0, ()): Fraction(1)})

    @classmethod
    def generator(cls, k: int) -> "UEAElement":
        return cls._raw({(0, (int(k),)): Fraction(1)})

    @classmethod
    def z_power(cls, t: int = 1) -> "UEAElement":
        if t < 0:
            raise ValueError("z powers must be non-negative")
        return cls._raw({(int(t), ()): Fraction(1)})

    @classmethod
    def monomial(cls, z_power: int, word, coeff=1) -> "UEAElement":
        return cls({(z_power, tuple(word)): coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, z_power: int, word) -> Fraction:
        return self._terms.get((z_power, tuple(word)), Fraction(0))

    @property
    def terms(self) -> dict[PBWMonomial, Fraction]:
        return {PBWMonomial(t, w): c for (t, w), c in self._terms.items()}

    def sorted_terms(self) -> list[tuple[PBWMonomial, Fraction]]:
        return [
            (PBWMonomial(t, w), c)
            for (t, w), c in sorted(self._terms.items(), key=_term_sort_key)
        ]

    def monomials(self) -> list[PBWMonomial]:
        return [m for m, _ in self.sorted_terms()]

    def weights(self) -> set[int]:
        return {sum(w) for (_, w) in self._terms}

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self):
        return UEAElement._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            cur = out.get(key)
            total = c if cur is None else cur + c
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return UEAElement._raw(out)

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return UEAElement._raw(kernel.multiply_terms(self._terms, other._terms))
        try:
            scale = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scale)

    def __rmul__(self, other):
        # Scalars only; UEAElement * UEAElement is handled by __mul__.
        try:
            scale = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scale)

    def _scaled(self, scale: Fraction) -> "UEAElement":
        if not scale:
            return UEAElement.zero()
        return UEAElement._raw({k: scale * c for k, c in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in U(V)")
        result = UEAElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self):
        parts = []
        for (t, word), c in sorted(self._terms.items(), key=_term_sort_key):
            factors = []
            if t == 1:
                factors.append("z")
            elif t > 1:
                factors.append(f"z^{t}")
            factors.extend(_render_word(word))
            parts.append((c, factors))
        return join_terms(parts)

    def __repr__(self):
        return f"<UEAElement {self}>"


def d(k: int) -> UEAElement:
    """The generator d_k."""
    return UEAElement.generator(k)


def bracket(i: int, j: int) -> UEAElement:
    """[d_i, d_j] = (j - i) d_{i+j} + delta_{j,-i} (i^3 - i)/12 z."""
    out: dict = {}
    if j != i:
        out[(0, (i + j,))] = Fraction(j - i)
    if j == -i:
        cc = kernel.central_coefficient(i)
        if cc:
            out[(1, ())] = cc
    return UEAElement._raw(out)


def straighten(word, z_power: int = 0, coeff=1) -> UEAElement:
    """Normal form of the single product z^z_power d_{word[0]} ... d_{word[-1]}.

    ``word`` is any sequence of generator indices; sums of products are
    handled by UEAElement arithmetic (every element is kept in normal
    form).  Passing a UEAElement returns it unchanged.
    """
    if isinstance(word, UEAElement):
        return word
    c0 = to_rational(coeff)
    if not c0:
        return UEAElement.zero()
    out: dict = {}
    for (dz, w), c in kernel.straighten_word(tuple(int(i) for i in word)).items():
        out[(z_power + dz, w)] = c0 * c
    return UEAElement._raw(out)


def multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    """Associative product of U(V), in PBW normal form."""
    return u * v


def commutator(u: UEAElement, v: UEAElement) -> UEAElement:
    """u v - v u."""
    return u * v - v * u


def ad_power(n: int, k: int, u: UEAElement) -> UEAElement:
    """k-fold iterated bracket of d_n against u, straightened.

    Every term of the result lies in the weight(u) + n*k graded component.
    """
    if n < 1:
        raise ValueError("ad_power requires n >= 1")
    if k < 0:
        raise ValueError("ad_power requires k >= 0")
    dn = d(n)
    out = u
    for _ in range(k):
        out = commutator(dn, out)
    return out
