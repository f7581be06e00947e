"""Whittaker module contexts, the module action, and vector extraction.

A context fixes the algebra map psi on the positive modes (psi(d_1) and
psi(d_2) nonzero; the bracket relations force psi(d_n) = 0 for n >= 3)
and selects one of two presentations:

* the universal module, free over the non-positive half on a cyclic
  vector w, with basis {z^t d_{-lam} w : lam a pseudopartition, t >= 0};
* the quotient by the left ideal generated by p(z) applied to w, for a
  monic p of degree >= 1, in which stored z-powers are reduced modulo p.
  The central quotient with character xi is the special case p = z - xi.

Elements store a map (z_power, lam) -> coefficient.  The action of a
normal-form element u on a basis vector straightens u * d_{-lam}, sends
every trailing positive mode to its psi value, and re-reads the
non-positive remainder as a basis vector.  The dot action of a positive
mode n is the psi-shifted action d_n . v = d_n v - psi(d_n) v; under it
every positive mode acts locally nilpotently, which is what drives the
constructive Whittaker-vector extraction below.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel
from .errors import ContextError, DomainError, ReductionError
from .partitions import Pseudopartition
from .scalar import NEG_INF, Poly, join_terms, poly_divmod, to_rational
from .virasoro import UEAElement

_ZERO = Fraction(0)
_ONE = Fraction(1)


class WhittakerHomomorphism:
    """The map psi on positive modes: n -> psi_n, zero from d_3 on."""

    __slots__ = ("psi1", "psi2")

    def __init__(self, psi1, psi2):
        p1 = to_rational(psi1)
        p2 = to_rational(psi2)
        if not p1 or not p2:
            raise DomainError("psi(d_1) and psi(d_2) must both be nonzero")
        self.psi1 = p1
        self.psi2 = p2

    def value(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("psi is defined on positive modes only")
        if n == 1:
            return self.psi1
        if n == 2:
            return self.psi2
        return _ZERO

    __call__ = value

    def __eq__(self, other):
        if not isinstance(other, WhittakerHomomorphism):
            return NotImplemented
        return (self.psi1, self.psi2) == (other.psi1, other.psi2)

    def __hash__(self):
        return hash((self.psi1, self.psi2))

    def __repr__(self):
        return f"WhittakerHomomorphism({self.psi1}, {self.psi2})"


class ModuleContext:
    """Universal module (p is None) or quotient by p(z) applied to w."""

    __slots__ = ("psi", "p", "_zreps")

    def __init__(self, psi: WhittakerHomomorphism, p: Poly | None = None):
        if not isinstance(psi, WhittakerHomomorphism):
            psi = WhittakerHomomorphism(*psi)
        if p is not None:
            if not isinstance(p, Poly):
                p = Poly(p)
            if p.degree < 1:
                raise DomainError("quotient polynomial must have degree >= 1")
            p = p.monic()
        self.psi = psi
        self.p = p
        self._zreps: dict[int, tuple] = {}

    @classmethod
    def universal(cls, psi) -> "ModuleContext":
        return cls(_as_psi(psi), None)

    @classmethod
    def central_quotient(cls, psi, xi) -> "ModuleContext":
        """The quotient on which z acts by the scalar xi."""
        return cls(_as_psi(psi), Poly.z_minus(xi))

    @classmethod
    def quotient(cls, psi, p: Poly) -> "ModuleContext":
        return cls(_as_psi(psi), p)

    @classmethod
    def witt(cls, psi) -> "ModuleContext":
        """Central character 0; the presentation on which the Witt quotient
        of the algebra acts."""
        return cls(_as_psi(psi), Poly.z())

    @property
    def is_universal(self) -> bool:
        return self.p is None

    def z_dimension(self):
        """Number of stored z-powers per pseudopartition (None if unbounded)."""
        return None if self.p is None else int(self.p.degree)

    def z_rep(self, t: int) -> tuple:
        """Representative of z^t: ((power, coeff), ...) with powers < deg p."""
        if self.p is None:
            return ((t, _ONE),)
        rep = self._zreps.get(t)
        if rep is None:
            if t < self.p.degree:
                rep = ((t, _ONE),)
            else:
                _, r = poly_divmod(Poly((0,) * t + (1,)), self.p)
                rep = tuple((i, c) for i, c in enumerate(r.coeffs) if c)
            self._zreps[t] = rep
        return rep

    def reduce_raw(self, raw: dict) -> dict:
        """Reduce universal-module terms into this context."""
        if self.p is None:
            return dict(raw)
        out: dict = {}
        for (t, parts), c in raw.items():
            for power, pc in self.z_rep(t):
                key = (power, parts)
                cur = out.get(key)
                total = c * pc if cur is None else cur + c * pc
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return out

    def element(self, terms=None) -> "ModuleElement":
        return ModuleElement(self, terms)

    def w(self, coeff=1) -> "ModuleElement":
        """The cyclic vector (scaled)."""
        return ModuleElement(self, {(0, ()): coeff})

    def basis_vector(self, t: int, lam) -> "ModuleElement":
        parts = lam.parts if isinstance(lam, Pseudopartition) else tuple(lam)
        return ModuleElement(self, {(t, parts): 1})

    def poly_vector(self, q: Poly) -> "ModuleElement":
        """q(z) w in this context."""
        return ModuleElement(
            self, {(i, ()): c for i, c in enumerate(q.coeffs) if c}
        )

    def from_universal(self, v: "ModuleElement") -> "ModuleElement":
        if not v.context.is_universal:
            raise ContextError("from_universal expects a universal-module element")
        if v.context.psi != self.psi:
            raise ContextError("psi mismatch between contexts")
        return ModuleElement._raw(self, self.reduce_raw(v._terms))

    def descriptor(self) -> str:
        if self.p is None:
            return "M"
        if self.p.degree == 1:
            return f"L:xi={-self.p.coeffs[0]}"
        return f"Q:p={self.p}"

    @classmethod
    def parse_descriptor(cls, text: str, psi) -> "ModuleContext":
        """Parse ``M``, ``L:xi=<rational>``, ``Q:p=<poly>``, or ``W``."""
        psi = _as_psi(psi)
        body = text.strip()
        if body == "M":
            return cls.universal(psi)
        if body == "W":
            return cls.witt(psi)
        if body.startswith("L:xi="):
            return cls.central_quotient(psi, to_rational(body[5:].strip()))
        if body.startswith("Q:p="):
            from .exprparse import evaluate_poly, parse_expression

            return cls.quotient(psi, evaluate_poly(parse_expression(body[4:])))
        raise DomainError(f"unknown module descriptor: {text!r}")

    def __eq__(self, other):
        if not isinstance(other, ModuleContext):
            return NotImplemented
        return self.psi == other.psi and self.p == other.p

    def __hash__(self):
        return hash((self.psi, self.p))

    def __repr__(self):
        return f"<ModuleContext {self.descriptor()} psi=({self.psi.psi1},{self.psi.psi2})>"


def _as_psi(psi) -> WhittakerHomomorphism:
    if isinstance(psi, WhittakerHomomorphism):
        return psi
    return WhittakerHomomorphism(*psi)


def _module_sort_key(item):
    (t, parts), _ = item
    return (-sum(parts), -len(parts), parts, t)


class ModuleElement:
    """Finite combination of basis vectors z^t d_{-lam} w in a context."""

    __slots__ = ("context", "_terms")

    def __init__(self, context: ModuleContext, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (t, lam), coeff in items:
                c = to_rational(coeff)
                if not c:
                    continue
                t = int(t)
                if t < 0:
                    raise ValueError("z powers must be non-negative")
                parts = lam.parts if isinstance(lam, Pseudopartition) else tuple(
                    sorted(int(k) for k in lam)
                )
                if parts and parts[0] < 0:
                    raise ValueError("pseudopartition parts must be non-negative")
                key = (t, parts)
                cur = data.get(key)
                total = c if cur is None else cur + c
                if total:
                    data[key] = total
                else:
                    data.pop(key, None)
        self.context = context
        self._terms = context.reduce_raw(data) if data else data

    @classmethod
    def _raw(cls, context: ModuleContext, data: dict) -> "ModuleElement":
        # Internal: data already reduced for the context, no zero coefficients.
        elem = cls.__new__(cls)
        elem.context = context
        elem._terms = data
        return elem

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, t: int, lam) -> Fraction:
        parts = lam.parts if isinstance(lam, Pseudopartition) else tuple(sorted(lam))
        return self._terms.get((t, parts), _ZERO)

    def terms(self) -> list[tuple[int, Pseudopartition, Fraction]]:
        return [
            (t, Pseudopartition(parts), c)
            for (t, parts), c in sorted(self._terms.items(), key=_module_sort_key)
        ]

    def raw_terms(self) -> dict:
        return dict(self._terms)

    def support_keys(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted(self._terms, key=lambda k: _module_sort_key((k, None)))

    def _require_same_context(self, other: "ModuleElement"):
        if self.context != other.context:
            raise ContextError("module elements live in different contexts")

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __neg__(self):
        return ModuleElement._raw(self.context, {k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        self._require_same_context(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            cur = out.get(key)
            total = c if cur is None else cur + c
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return ModuleElement._raw(self.context, out)

    def __sub__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        try:
            scale = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scale)

    def __rmul__(self, other):
        if isinstance(other, UEAElement):
            return act(other, self)
        try:
            scale = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scale)

    def _scaled(self, scale: Fraction) -> "ModuleElement":
        if not scale:
            return ModuleElement._raw(self.context, {})
        return ModuleElement._raw(
            self.context, {k: scale * c for k, c in self._terms.items()}
        )

    def maxdeg(self):
        """Maximum |lam| over nonzero terms; NEG_INF for the zero element."""
        if not self._terms:
            return NEG_INF
        return max(sum(parts) for (_, parts) in self._terms)

    def max_d0(self):
        """Maximum lam(0) over nonzero terms; NEG_INF for the zero element."""
        if not self._terms:
            return NEG_INF
        best = 0
        for (_, parts) in self._terms:
            zeros = 0
            for k in parts:
                if k:
                    break
                zeros += 1
            if zeros > best:
                best = zeros
        return best

    def poly_part(self) -> Poly | None:
        """The polynomial q with self = q(z) w, or None if any d-factor
        is present."""
        coeffs: dict[int, Fraction] = {}
        for (t, parts), c in self._terms.items():
            if parts:
                return None
            coeffs[t] = c
        if not coeffs:
            return Poly.zero()
        out = [_ZERO] * (max(coeffs) + 1)
        for t, c in coeffs.items():
            out[t] = c
        return Poly(out)

    def json_terms(self) -> list[dict]:
        return [
            {"z": t, "lambda": list(parts), "coeff": str(c)}
            for (t, parts), c in sorted(self._terms.items(), key=_module_sort_key)
        ]

    def __str__(self):
        parts_out = []
        for (t, parts), c in sorted(self._terms.items(), key=_module_sort_key):
            factors = []
            if t == 1:
                factors.append("z")
            elif t > 1:
                factors.append(f"z^{t}")
            i = len(parts)
            while i > 0:
                j = i
                while j > 0 and parts[j - 1] == parts[i - 1]:
                    j -= 1
                e = i - j
                k = parts[i - 1]
                base = f"d-{k}" if k else "d0"
                factors.append(f"{base}^{e}" if e > 1 else base)
                i = j
            factors.append("w")
            parts_out.append((c, factors))
        return join_terms(parts_out)

    def __repr__(self):
        return f"<ModuleElement {self} in {self.context.descriptor()}>"


def act(u: UEAElement, v: ModuleElement) -> ModuleElement:
    """The module action of a normal-form element on a module element."""
    if not isinstance(u, UEAElement):
        raise TypeError("act expects a UEAElement on the left")
    psi = v.context.psi
    raw = kernel.act_terms(u._terms, v._terms, psi.psi1, psi.psi2)
    return ModuleElement._raw(v.context, v.context.reduce_raw(raw))


def maxdeg(v: ModuleElement):
    return v.maxdeg()


def max_d0(v: ModuleElement):
    return v.max_d0()


def dot_act(n: int, v: ModuleElement) -> ModuleElement:
    """The psi-shifted action d_n . v = d_n v - psi(d_n) v, for n >= 1."""
    if n < 1:
        raise ValueError("the dot action is defined for positive modes only")
    out = act(UEAElement.generator(n), v)
    pn = v.context.psi.value(n)
    if pn:
        out = out - v._scaled(pn)
    return out


def is_whittaker_vector(v: ModuleElement) -> bool:
    """True when d_1 and d_2 both dot-annihilate v.

    d_1 and d_2 generate the positive half, so this suffices; the zero
    element counts as a (trivial) Whittaker vector.
    """
    return dot_act(1, v).is_zero() and dot_act(2, v).is_zero()


def _descent_measure(v: ModuleElement) -> tuple[int, int]:
    """(maxdeg, max lam(0) among maximal-degree terms); v must be nonzero."""
    top = -1
    for (_, parts) in v._terms:
        s = sum(parts)
        if s > top:
            top = s
    d0 = 0
    for (_, parts) in v._terms:
        if sum(parts) != top:
            continue
        zeros = 0
        for k in parts:
            if k:
                break
            zeros += 1
        if zeros > d0:
            d0 = zeros
    return (top, d0)


def _descent_mode(v: ModuleElement) -> int:
    """The k+2 to apply next: k is minimal with lam(k) != 0 among the
    maximal-degree terms of v."""
    top = max(sum(parts) for (_, parts) in v._terms)
    k = None
    for (_, parts) in v._terms:
        if parts and sum(parts) == top:
            if k is None or parts[0] < k:
                k = parts[0]
    if k is None:
        raise ReductionError("no reducible term; element should be Whittaker already")
    return k + 2


def whittaker_reduce(v: ModuleElement) -> tuple[list[int], ModuleElement]:
    """Extract a nonzero Whittaker vector from the submodule generated by v.

    Repeatedly applies the dot action of d_{k+2} where k is minimal with
    lam(k) != 0 among the terms of maximal degree.  Each application
    strictly decreases the pair (maxdeg, max lam(0) among maximal-degree
    terms) lexicographically; the trace of applied modes k+2 is returned
    with the resulting vector.  Raises ReductionError if the measure ever
    fails to decrease or the iteration cap is exceeded -- that would be an
    engine bug, not a property of the input.
    """
    if v.is_zero():
        raise ValueError("whittaker_reduce requires a nonzero element")
    if v.context.is_universal:
        raise ContextError("whittaker_reduce operates in quotient contexts")
    top, d0max = _descent_measure(v)
    cap = (top + 1) * (v.max_d0() + top + 2)
    trace: list[int] = []
    measure = (top, d0max)
    while not is_whittaker_vector(v):
        if len(trace) >= cap:
            raise ReductionError(
                f"iteration cap {cap} exceeded without reaching a Whittaker vector"
            )
        mode = _descent_mode(v)
        nxt = dot_act(mode, v)
        if nxt.is_zero():
            raise ReductionError("descent step annihilated a non-Whittaker vector")
        nxt_measure = _descent_measure(nxt)
        if not nxt_measure < measure:
            raise ReductionError(
                f"descent measure failed to decrease: {measure} -> {nxt_measure}"
            )
        v = nxt
        measure = nxt_measure
        trace.append(mode)
    return trace, v


def nilpotency_index(n: int, lam, psi) -> tuple[int, int]:
    """Minimal k with (d_n .)^k d_{-lam} w = 0 in the universal module,
    together with the a-priori bound: the smallest k with
    n*k > |lam| + 2 #(lam).  The measured index never exceeds the bound.
    """
    if n < 1:
        raise ValueError("nilpotency index is defined for positive modes only")
    if not isinstance(lam, Pseudopartition):
        lam = Pseudopartition(lam)
    ctx = ModuleContext.universal(_as_psi(psi))
    bound = (lam.size + 2 * lam.count) // n + 1
    v = ctx.basis_vector(0, lam)
    index = 0
    while not v.is_zero():
        v = dot_act(n, v)
        index += 1
        if index > bound:
            raise ReductionError(
                f"dot action of d_{n} not nilpotent within the bound {bound}"
            )
    return index, bound


def map_from_universal(u: UEAElement, target: ModuleContext) -> ModuleElement:
    """Image of u under the canonical map sending w to the target's cyclic
    vector: u acting on w, computed in the target context."""
    return act(u, target.w())
