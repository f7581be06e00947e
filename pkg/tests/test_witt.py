"""Projection to the centerless quotient and its module action."""

import random
from fractions import Fraction

import pytest

from vira.analysis import TruncationSpec, whittaker_solve
from vira.errors import ContextError
from vira.scalar import Poly
from vira.virasoro import UEAElement, bracket, commutator, d, straighten
from vira.whittaker import ModuleContext, WhittakerHomomorphism, act
from vira.witt import WittElement, project, witt_act, witt_bracket

PSI = WhittakerHomomorphism(1, 1)


class TestProject:
    def test_drops_central_term(self):
        u = d(2) * d(-2)  # d-2 d2 - 4 d0 + (1/2) z
        expected = straighten([-2, 2]) - 4 * d(0)
        assert project(u) == WittElement(expected)

    def test_kills_pure_z(self):
        assert project(UEAElement.z_power(3)).is_zero()

    def test_fixes_z_free_elements(self):
        assert project(d(5)) == WittElement(d(5))

    def test_rejects_z_in_direct_construction(self):
        with pytest.raises(ValueError):
            WittElement(UEAElement.z_power(1))

    def test_bracket_homomorphism(self):
        for i in range(-6, 7):
            for j in range(-6, 7):
                assert project(bracket(i, j)) == witt_bracket(i, j)
                central = commutator(d(i), d(j))
                assert all(t == 0 for (t, _w) in project(central).lift()._terms)


class TestWittAct:
    def test_no_central_term(self):
        ctx = ModuleContext.witt(PSI)
        got = witt_act(WittElement(d(2)), ctx.basis_vector(0, (2,)))
        expected = ctx.basis_vector(0, (2,)) * PSI.psi2 - 4 * ctx.basis_vector(0, (0,))
        assert got == expected

    def test_cyclic_vector(self):
        ctx = ModuleContext.witt(PSI)
        assert witt_act(WittElement(d(1)), ctx.w()) == ctx.w()

    def test_projected_central_multiple_acts_as_zero(self):
        ctx = ModuleContext.witt(PSI)
        u = project(UEAElement.z_power(1) * d(-1))
        assert witt_act(u, ctx.w()).is_zero()

    def test_guard_rejects_other_characters(self):
        bad = ModuleContext.central_quotient(PSI, Fraction(5, 7))
        with pytest.raises(ContextError):
            witt_act(WittElement(d(1)), bad.w())
        with pytest.raises(ContextError):
            witt_act(WittElement(d(1)), ModuleContext.universal(PSI).w())

    def test_agrees_with_any_preimage(self):
        rng = random.Random(13)
        ctx = ModuleContext.witt(PSI)
        for _ in range(30):
            word = [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))]
            u = straighten(word, z_power=rng.randint(0, 1))
            v = ctx.basis_vector(0, (rng.randint(0, 2), rng.randint(1, 2)))
            assert witt_act(project(u), v) == act(u, v)

    def test_whittaker_line_is_one_dimensional(self):
        ctx = ModuleContext.witt(PSI)
        assert len(whittaker_solve(ctx, TruncationSpec(4, 2, 0))) == 1

    def test_context_is_quotient_by_z(self):
        assert ModuleContext.witt(PSI).p == Poly.z()
