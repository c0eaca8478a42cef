import pytest

from skeinlab.algebra import EvalPoint, LaurentPoly, RatFunc, delta_color, loop_weight, quantum_integer
from skeinlab.bracket import (
    bracket,
    bracket_state_sum,
    bracket_tangle_sweep,
    colored_bracket,
    tl_closure,
    tl_compose,
)
from skeinlab.diagrams import (
    ColoredLink,
    FramedLink,
    PlanarDiagram,
    braid_closure,
    unknot_fixture,
)
from skeinlab.errors import (
    ArityError,
    ColorRangeError,
    DiagramTooLargeError,
    PoleError,
    SliceWidthError,
)
from skeinlab.recoupling import hopf_eval, twist_coefficient
from skeinlab.tl import TLDiagram, TLElement, compose, identity, hook, jones_wenzl
from skeinlab.verify import random_braid_closure

delta = loop_weight()


def test_empty_diagram_is_one():
    assert bracket_state_sum(PlanarDiagram((), 0)) == LaurentPoly.one()
    assert bracket_tangle_sweep(PlanarDiagram((), 0)) == LaurentPoly.one()


def test_unknot_and_free_loops(unknot):
    assert bracket(unknot.diagram) == delta
    assert bracket(PlanarDiagram((), 3)) == delta ** 3


def test_kink_values():
    pos = unknot_fixture(1)
    neg = unknot_fixture(-1)
    assert bracket_state_sum(pos.diagram) == LaurentPoly.monomial(3, -1) * delta
    assert bracket_state_sum(neg.diagram) == LaurentPoly.monomial(-3, -1) * delta


def test_hopf_value(hopf):
    want = delta * (-(LaurentPoly.monomial(4) + LaurentPoly.monomial(-4)))
    assert bracket(hopf.diagram) == want
    assert str(want) == "A^6 + A^2 + A^-2 + A^-6"


def test_sweep_matches_state_sum_on_random_diagrams(rng):
    for _ in range(150):
        link = random_braid_closure(rng)
        diag = link.diagram
        assert bracket_tangle_sweep(diag) == bracket_state_sum(diag)


def test_state_sum_cap():
    big = braid_closure([1] * 21, 2)
    with pytest.raises(DiagramTooLargeError):
        bracket_state_sum(big)


def test_sweep_width_cap(borromean):
    with pytest.raises(SliceWidthError):
        bracket_tangle_sweep(borromean.diagram, max_width=2)


# -- Temperley-Lieb layer -------------------------------------------------------


def test_compose_counts_bubbles():
    n = 2
    cup_cap = hook(n, 1)
    composed, bubbles = compose(cup_cap, cup_cap)
    assert composed == cup_cap
    assert bubbles == 1


def test_tl_element_closure_of_identity():
    for n in range(4):
        assert tl_closure(TLElement.identity_element(n)) == RatFunc(delta ** n)


def test_tl_compose_arity_mismatch():
    with pytest.raises(ArityError):
        tl_compose(TLElement.identity_element(2), TLElement.identity_element(3))


def test_noncrossing_validation():
    with pytest.raises(ValueError):
        TLDiagram.make(2, ((0, 2), (1, 3)))


def test_jones_wenzl_two_strands():
    e2 = jones_wenzl(2)
    assert e2.coefficient(identity(2)) == RatFunc(LaurentPoly.one())
    assert e2.coefficient(hook(2, 1)) == RatFunc(LaurentPoly.const(-1), delta)


@pytest.mark.parametrize("n", range(5))
def test_jones_wenzl_idempotent(n):
    e = jones_wenzl(n)
    assert e * e == e


@pytest.mark.parametrize("n", range(1, 6))
def test_jones_wenzl_killed_by_hooks(n):
    e = jones_wenzl(n)
    zero = TLElement(n, {}, LaurentPoly.one())
    for i in range(1, n):
        assert tl_compose(TLElement.hook_element(n, i), e) == zero
        assert tl_compose(e, TLElement.hook_element(n, i)) == zero


@pytest.mark.parametrize("n", range(6))
def test_jones_wenzl_closure(n):
    sign = 1 if n % 2 == 0 else -1
    assert tl_closure(jones_wenzl(n)) == RatFunc(quantum_integer(n + 1).scale(sign))


# -- colored brackets -----------------------------------------------------------


@pytest.mark.parametrize("n", range(5))
def test_colored_unknot(unknot, n):
    assert colored_bracket(unknot, (n,)) == RatFunc(delta_color(n))


@pytest.mark.parametrize("n", range(4))
def test_colored_kink_framing(n):
    got = colored_bracket(unknot_fixture(1), (n,))
    assert got == RatFunc(twist_coefficient(n) * delta_color(n))


def test_colored_hopf_matches_closed_form(hopf):
    for i in range(3):
        for a in range(3):
            assert colored_bracket(hopf, (i, a)) == RatFunc(hopf_eval(i, a))


def test_colored_link_argument(hopf):
    colored = ColoredLink(hopf, (1, 1))
    assert colored_bracket(colored) == RatFunc(quantum_integer(4))
    with pytest.raises(ArityError):
        colored_bracket(colored, (1, 1))


def test_color_zero_deletes(hopf):
    assert colored_bracket(hopf, (0, 2)) == RatFunc(delta_color(2))


def test_colored_bracket_at_point(unknot):
    v = colored_bracket(unknot, (2,), point=EvalPoint(2, 1))
    assert v == colored_bracket(unknot, (2,), point=EvalPoint(2, 1))
    assert not v.is_zero()


def test_colored_error_paths(hopf, unknot):
    with pytest.raises(ArityError):
        colored_bracket(hopf, (1,))
    with pytest.raises(ColorRangeError):
        colored_bracket(hopf, (1, -1))
    with pytest.raises(DiagramTooLargeError):
        colored_bracket(unknot, (9,))
    with pytest.raises(PoleError):
        # the three-strand projector has [3] in its denominator, which
        # vanishes at the level-1 point
        colored_bracket(unknot, (3,), point=EvalPoint(1, 1))
