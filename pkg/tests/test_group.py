"""Wreath-product elements and both polynomial actions."""

import random
from fractions import Fraction
from math import factorial

import pytest

from quasicov.errors import ResourceLimitError
from quasicov.group import (
    GroupElement,
    classical_act,
    diagonal_generator,
    element_weight,
    enumerate_group,
    fixed_space_dimension,
    generators,
    group_mul,
    identity,
    inverse,
    is_quasi_invariant,
    parse_group_element,
    quasi_act,
    render_group_element,
    to_matrix,
    transposition,
)
from quasicov.polynomials import Polynomial, parse_polynomial, promote_to_cyclotomic
from quasicov.qsym import compositions_of, elementary_symmetric_power, monomial_qsym
from quasicov.scalars import Cyclotomic

EXAMPLE_ELEMENT = "tau=3,1,2;weights=1,0,1"


def test_element_validation():
    with pytest.raises(ValueError):
        GroupElement(2, 2, (1, 1), (0, 0))
    with pytest.raises(ValueError):
        GroupElement(2, 2, (1, 2), (0, 2))
    with pytest.raises(ValueError):
        GroupElement(0, 2, (), ())


def test_parse_render_round_trip():
    g = parse_group_element(EXAMPLE_ELEMENT, 3, 3)
    assert g.tau == (3, 1, 2)
    assert g.weights == (1, 0, 1)
    assert render_group_element(g) == EXAMPLE_ELEMENT
    with pytest.raises(ValueError):
        parse_group_element("tau=1,2", 2, 2)


def test_matrix_model():
    g = parse_group_element(EXAMPLE_ELEMENT, 3, 3)
    j = Cyclotomic.zeta(3)
    zero, one = Cyclotomic.zero(3), Cyclotomic.one(3)
    assert to_matrix(g) == [
        [zero, zero, j],
        [one, zero, zero],
        [zero, j, zero],
    ]


def test_identity_and_inverse():
    for n, m in [(1, 1), (2, 2), (3, 3)]:
        e = identity(n, m)
        for g in enumerate_group(n, m):
            assert group_mul(g, e) == g
            assert group_mul(e, g) == g
            assert group_mul(g, inverse(g)) == e
            assert group_mul(inverse(g), g) == e


def test_diagonal_generator_squares():
    g1 = diagonal_generator(2, 3)
    assert group_mul(g1, g1).weights == (2, 0)
    assert group_mul(g1, g1).tau == (1, 2)


def _matrix_product(a, b):
    n = len(a)
    zero = a[0][0] - a[0][0]
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            acc = zero
            for j in range(n):
                acc = acc + a[i][j] * b[j][k]
            out[i][k] = acc
    return out


def test_group_mul_composes_substitutions():
    # group_mul(g, h) acts as g after h, i.e. matrix(h) * matrix(g)
    elements = enumerate_group(3, 2)
    rng = random.Random(9)
    for _ in range(40):
        g, h = rng.choice(elements), rng.choice(elements)
        assert to_matrix(group_mul(g, h)) == _matrix_product(to_matrix(h), to_matrix(g))


def test_generator_closure_is_the_whole_group():
    gens = generators(2, 2)
    known = set(gens) | {identity(2, 2)}
    frontier = list(known)
    while frontier:
        fresh = []
        for a in list(known):
            for b in frontier:
                c = group_mul(a, b)
                if c not in known:
                    known.add(c)
                    fresh.append(c)
        frontier = fresh
    assert len(known) == 8  # 2^2 * 2!


def test_enumerate_group():
    assert enumerate_group(1, 1) == [identity(1, 1)]
    assert len(enumerate_group(2, 2)) == 8
    assert len(enumerate_group(3, 3)) == 162
    assert len(set(enumerate_group(3, 3))) == 162
    with pytest.raises(ResourceLimitError):
        enumerate_group(3, 3, max_order=100)


def test_classical_action_examples():
    g = parse_group_element(EXAMPLE_ELEMENT, 3, 3)
    p = parse_polynomial("x1^2*x2", 3)
    j = Cyclotomic.zeta(3)
    assert classical_act(g, p) == Polynomial(3, {(1, 0, 2): j**2})
    e = identity(3, 3)
    assert classical_act(e, p) == promote_to_cyclotomic(p, 3)
    # x2 is untouched by a diagonal entry at position 1
    g1 = diagonal_generator(2, 2)
    x2 = parse_polynomial("x2", 2)
    assert classical_act(g1, x2) == promote_to_cyclotomic(x2, 2)


def test_quasi_action_worked_example():
    g = parse_group_element(EXAMPLE_ELEMENT, 3, 3)
    p = parse_polynomial("x1^2*x2", 3)
    j = Cyclotomic.zeta(3)
    assert quasi_act(g, p) == Polynomial(3, {(2, 0, 1): j**2})


def test_quasi_action_weight_rules():
    g1 = diagonal_generator(2, 2)
    # all exponents divisible by m: no weight factor
    p = parse_polynomial("x1^2", 2)
    assert quasi_act(g1, p) == promote_to_cyclotomic(p, 2)
    # the global weight applies even though x1 is absent from the support
    x2 = parse_polynomial("x2", 2)
    assert quasi_act(g1, x2) == Polynomial(2, {(0, 1): Cyclotomic.from_rational(2, -1)})


def test_quasi_action_moves_support_and_resorts():
    s1 = transposition(2, 1, 1)
    assert quasi_act(s1, parse_polynomial("x1", 2)) == promote_to_cyclotomic(
        parse_polynomial("x2", 2), 1
    )
    # support {1,2} maps to {2,1}, sorted back: exponents reattach in order
    p = parse_polynomial("x1^2*x2", 2)
    assert quasi_act(s1, p) == promote_to_cyclotomic(p, 1)


def test_constants_are_fixed():
    c = Polynomial.constant(3, Fraction(5, 3))
    for g in enumerate_group(3, 2):
        assert quasi_act(g, c) == promote_to_cyclotomic(c, 2)


def test_is_quasi_invariant_examples():
    assert is_quasi_invariant(monomial_qsym((2, 1), 3).substitute_power(2), 3, 2)
    assert not is_quasi_invariant(parse_polynomial("x1", 2), 2, 1)
    assert is_quasi_invariant(Polynomial.constant(2, 3), 2, 5)


def test_classical_invariants_are_quasi_invariant():
    # e_k(x^m) is fixed by the quasi action as well as the classical one
    for n, m in [(2, 2), (3, 2), (2, 3)]:
        for k in range(1, n + 1):
            assert is_quasi_invariant(elementary_symmetric_power(k, n, m), n, m)


def test_order_one_case_fixes_every_monomial_generator():
    # at m = 1 the quasi action fixes all quasi-symmetric polynomials
    for n in range(1, 5):
        for d in range(5):
            for alpha in compositions_of(d, n):
                assert is_quasi_invariant(monomial_qsym(alpha, n), n, 1)


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_averaging_annihilates_off_lattice_monomials(n, m):
    """Averaging a diagonal generator over its cyclic group kills any
    monomial with an exponent not divisible by m and fixes the rest."""
    rng = random.Random(n * 10 + m)
    for j in range(1, n + 1):
        gj = diagonal_generator(n, m, j)
        for _ in range(10):
            nu = tuple(rng.randrange(2 * m) for _ in range(n))
            p = promote_to_cyclotomic(Polynomial.monomial(nu, 1), m)
            total = Polynomial.zero(n)
            g = identity(n, m)
            for _ in range(m):
                total = total + quasi_act(g, p)
                g = group_mul(gj, g)
            average = total / m
            if all(e % m == 0 for e in nu):
                assert average == p
            else:
                assert average.is_zero()


@pytest.mark.parametrize("n,m", [(1, 2), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_action_axiom_all_pairs(n, m):
    elements = enumerate_group(n, m)
    rng = random.Random(500 + 10 * n + m)
    for g in elements:
        for h in elements:
            nu = tuple(rng.randrange(4) for _ in range(n))
            p = Polynomial.monomial(nu, 1)
            gh = group_mul(g, h)
            assert quasi_act(gh, p) == quasi_act(g, quasi_act(h, p))
            assert classical_act(gh, p) == classical_act(g, classical_act(h, p))


def test_weight_multiplicativity():
    elements = enumerate_group(2, 3)
    for g in elements:
        for h in elements:
            assert element_weight(group_mul(g, h)) == element_weight(g) * element_weight(h)


def test_fixed_space_dimension_examples():
    assert fixed_space_dimension(2, 2, 2, "quasi") == 1  # spanned by x1^2 + x2^2
    assert fixed_space_dimension(2, 2, 1, "quasi") == 0
    assert fixed_space_dimension(3, 2, 0, "quasi") == 1
    assert fixed_space_dimension(3, 2, 0, "classical") == 1
    with pytest.raises(ValueError):
        fixed_space_dimension(2, 2, 1, "other")
    with pytest.raises(ResourceLimitError):
        fixed_space_dimension(3, 3, 6, "quasi", max_entries=10)


def _partitions_with_part_at_most(d, largest):
    if d == 0:
        return 1
    if largest == 0:
        return 0
    return sum(
        _partitions_with_part_at_most(d - part, part)
        for part in range(min(d, largest), 0, -1)
    )


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 1), (2, 3)])
def test_classical_fixed_space_dimension(n, m):
    """Classical invariants are polynomials in e_1(x^m)..e_n(x^m), so the
    degree-d dimension counts partitions of d/m with parts at most n."""
    for d in range(7):
        expected = _partitions_with_part_at_most(d // m, n) if d % m == 0 else 0
        assert fixed_space_dimension(n, m, d, "classical") == expected
