import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcalc.qscalar import ZERO, ONE, Q, Q_INV
from qcalc.qscalar import ScalarParseError
from qcalc.suq2 import Monomial, AlgebraElement, TensorElement
from qcalc.suq2 import LocalizationError
from qcalc.suq2 import DEFINING_RELATIONS, UNIT
from qcalc.suq2 import generator, one, normal_form
from qcalc.suq2 import star, antipode, counit, coproduct, omega_word
from qcalc.suq2 import render_element, parse_element
from qcalc.suq2 import relation_element, pbw_monomials, random_word
from qcalc.suq2 import assert_monomial
from qcalc.suq2 import verify_hopf_conventions

PBW_2 = pbw_monomials(2)
PBW_3 = pbw_monomials(3)


@st.composite
def elements(draw, max_degree: int = 2):
    """
    Draws random elements as combinations of at most three PBW monomials with small integer coefficients.
    """
    monomials = draw(st.lists(st.sampled_from(pbw_monomials(max_degree)), min_size=1, max_size=3))
    coefficients = draw(st.lists(st.integers(-2, 2), min_size=len(monomials), max_size=len(monomials)))
    result = AlgebraElement()
    for monomial, coefficient in zip(monomials, coefficients):
        result = result + AlgebraElement.monomial(monomial, coefficient)
    return result


def test_monomial_properties():
    monomial = Monomial(a=2, b=1, c=-1)
    assert_monomial(monomial)
    assert monomial.kind == 'A'
    assert monomial.localized
    assert monomial.degree == 4
    assert monomial.weight == 2 - 1 - 1
    assert monomial.letters() == ('a', 'a', 'b', 'c-')
    assert monomial.render() == 'a^2*b*c^-1'

    assert Monomial(b=1, d=1).kind == 'D'
    assert UNIT.render() == '1'


def test_pbw_monomials():
    # 10 monomials a^p b^m c^r and 4 monomials b^m c^r d^s with s >= 1
    assert len(PBW_2) == 14
    assert len(set(PBW_2)) == 14
    assert PBW_2[0] == UNIT
    for monomial in PBW_2:
        assert_monomial(monomial, localized=False)

    localized = pbw_monomials(2, localized=True)
    assert set(PBW_2) < set(localized)
    assert Monomial(b=-1, c=-1) in localized


@pytest.mark.parametrize('name, relation', DEFINING_RELATIONS)
def test_defining_relations_hold(name, relation):
    assert relation_element(relation).is_zero(), name


def test_normal_ordering_rules():
    a, b, c, d = (generator(name) for name in 'abcd')
    assert b * a == (a * b).scale(Q_INV)
    assert c * a == (a * c).scale(Q_INV)
    assert d * b == (b * d).scale(Q_INV)
    assert c * b == b * c
    # da = 1 + q^-1 bc and ad = 1 + q bc
    assert d * a == one() + (b * c).scale(Q_INV)
    assert a * d == one() + (b * c).scale(Q)
    assert (a * d) * a == a * (d * a)


def test_localized_inverses():
    b, c = generator('b'), generator('c')
    assert b * generator('b-') == one()
    assert generator('c-') * c == one()

    # a c^-1 commutes with c^-1 up to q
    z = normal_form(['a', 'c-'], localized=True)
    assert z.localized
    assert star(z) == normal_form([-1, 'd', 'b-'], localized=True)
    assert star(star(z)) == z

    with pytest.raises(LocalizationError):
        normal_form(['a', 'c-'])


@given(elements(), elements(), elements())
@settings(max_examples=30, deadline=None)
def test_multiplication_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_associativity_on_random_words():
    rng = random.Random(0)
    for _ in range(20):
        words = [random_word(rng, 3) for _ in range(3)]
        x, y, z = (normal_form(word) for word in words)
        assert (x * y) * z == x * (y * z)


def test_normal_form_is_confluent():
    # Every split of a word into two normal forms multiplies back to the same normal form
    rng = random.Random(1)
    for _ in range(200):
        word = random_word(rng, 6)
        expected = normal_form(word)
        for index in range(len(word) + 1):
            assert normal_form(word[:index]) * normal_form(word[index:]) == expected, word


@given(elements(), elements())
@settings(max_examples=30, deadline=None)
def test_star_is_involutive_antihomomorphism(x, y):
    assert star(star(x)) == x
    assert star(x * y) == star(y) * star(x)


@given(elements(), elements())
@settings(max_examples=20, deadline=None)
def test_coproduct_and_counit_are_homomorphisms(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
    assert counit(x * y) == counit(x) * counit(y)


@given(elements())
@settings(max_examples=20, deadline=None)
def test_antipode_axiom(x):
    # m (S (x) id) coproduct(x) = counit(x) 1
    assert coproduct(x).map(left=antipode).contract() == one().scale(counit(x))
    # (counit (x) id) coproduct(x) = x
    assert coproduct(x).map(left=lambda y: one().scale(counit(y))).contract() == x


def triple_coproduct(x: AlgebraElement, side: str) -> dict:
    """
    Returns (coproduct (x) id) coproduct(x) for side "left" and (id (x) coproduct) coproduct(x) for side
    "right" as a dict of monomial triples.
    """
    result = {}
    for (left, right), coefficient in coproduct(x).items():
        split = left if side == 'left' else right
        for (first, second), inner in coproduct(AlgebraElement.monomial(split)).items():
            key = (first, second, right) if side == 'left' else (left, first, second)
            result[key] = result.get(key, ZERO) + coefficient * inner

    return {key: value for key, value in result.items() if value != ZERO}


@pytest.mark.parametrize('monomial', PBW_3)
def test_coproduct_is_coassociative(monomial):
    x = AlgebraElement.monomial(monomial)
    assert triple_coproduct(x, 'left') == triple_coproduct(x, 'right')


@pytest.mark.parametrize('monomial', PBW_3)
def test_hopf_axioms_on_monomials(monomial):
    x = AlgebraElement.monomial(monomial)
    unit = one().scale(counit(x))
    assert coproduct(x).map(left=antipode).contract() == unit
    assert coproduct(x).map(right=antipode).contract() == unit
    assert coproduct(x).map(left=lambda y: one().scale(counit(y))).contract() == x
    assert coproduct(x).map(right=lambda y: one().scale(counit(y))).contract() == x


@pytest.mark.parametrize('monomial', PBW_3)
def test_antipode_after_star_squares_to_identity(monomial):
    x = AlgebraElement.monomial(monomial)
    assert antipode(star(antipode(star(x)))) == x


def test_hopf_structure_on_generators():
    a, b, c, d = (generator(name) for name in 'abcd')
    assert antipode(a) == d
    assert antipode(b) == b.scale(-Q_INV)
    assert antipode(c) == c.scale(-Q)
    assert star(b) == c.scale(-Q)
    assert star(c) == b.scale(-Q_INV)
    assert counit(a) == ONE
    assert counit(b) == ZERO

    expected = TensorElement.from_pairs([(ONE, a, a), (ONE, b, c)])
    assert coproduct(a) == expected


def test_hopf_operations_reject_localized_elements():
    with pytest.raises(LocalizationError):
        counit(generator('b-'))

    with pytest.raises(LocalizationError):
        coproduct(generator('c-'))


def test_omega_word_vanishes_on_constants():
    assert not omega_word(one())
    # The counit is subtracted, so the word of the unit plus a generator is the word of the generator
    assert omega_word(one() + generator('a')) == omega_word(generator('a'))


@given(elements())
@settings(max_examples=30, deadline=None)
def test_render_parse_is_stable(x):
    assert parse_element(render_element(x)) == x


def test_parse_element():
    assert parse_element('b*a') == normal_form(['b', 'a'])
    assert parse_element('q^2*a + d - (q^2 + 1)') == generator('a').scale(Q ** 2) + generator('d') - (Q ** 2 + 1)
    assert parse_element('b^-1*c', localized=True) == normal_form(['b-', 'c'], localized=True)

    x = normal_form(['a', 'c-', 'b'], localized=True)
    assert parse_element(render_element(x), localized=True) == x


@pytest.mark.parametrize('text, localized', [
    ('b^-1', False),
    ('a^-1', True),
    ('d^-2', True),
])
def test_parse_element_rejects_invalid_inverses(text, localized):
    with pytest.raises(LocalizationError):
        parse_element(text, localized=localized)


def test_parse_element_rejects_garbage():
    with pytest.raises(ScalarParseError):
        parse_element('a +* b')

    with pytest.raises(ScalarParseError):
        parse_element('x*a')


def test_negative_powers_are_rejected():
    with pytest.raises(ValueError):
        generator('a') ** -1


def test_verify_hopf_conventions():
    records = verify_hopf_conventions()
    assert len(records) == 9
    for record in records:
        assert record.passed, record.detail
