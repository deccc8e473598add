import pytest

from qcalc.qscalar import ZERO, ONE, Q, Q_INV
from qcalc.suq2 import LocalizationError
from qcalc.suq2 import generator, one, parse_element, counit
from qcalc.fodc import THREE_D, FOUR_D_PLUS, FOUR_D_MINUS, Q3_PLUS, Q3_MINUS, CALCULUS_IDS
from qcalc.fodc import UnknownCalculusError
from qcalc.fodc import OneForm
from qcalc.fodc import make_calculus, replace_commutation, ideal_element
from qcalc.fodc import differential, differential_word, omega_gamma, push_left, star_form
from qcalc.fodc import verify_calculus, verify_quotient_reduction
from qcalc.report import all_passed


def test_make_calculus_ids_and_aliases():
    for calculus_id in CALCULUS_IDS:
        calc = make_calculus(calculus_id)
        assert calc.id == calculus_id

    assert make_calculus('THREE_D') is make_calculus(THREE_D)
    assert make_calculus('Q3_MINUS').id == Q3_MINUS
    assert len(make_calculus(THREE_D).form_basis) == 3
    assert len(make_calculus(FOUR_D_PLUS).form_basis) == 4
    assert len(make_calculus(Q3_PLUS).form_basis) == 3


def test_make_calculus_unknown_id_suggests_correction():
    with pytest.raises(UnknownCalculusError) as e:
        make_calculus('4D')

    assert 'Did you mean' in str(e.value)


def test_three_d_differentials_of_generators():
    calc = make_calculus(THREE_D)
    a, b = generator('a'), generator('b')
    assert differential(a, calc) == OneForm(calc, {'w1': a, 'w2': b})
    assert differential(b, calc) == OneForm(calc, {'w0': a, 'w1': b.scale(-Q ** 2)})
    assert differential(one(), calc).is_zero()


def test_three_d_invariant_forms_of_generators():
    # w0 = w(b), w1 = w(a), w2 = w(c)
    calc = make_calculus(THREE_D)
    for name, form in [('b', 'w0'), ('a', 'w1'), ('c', 'w2')]:
        assert omega_gamma(generator(name), calc) == OneForm.basis(calc, form)


def test_three_d_commutation():
    calc = make_calculus(THREE_D)
    a, b = generator('a'), generator('b')
    w0, w1 = OneForm.basis(calc, 'w0'), OneForm.basis(calc, 'w1')
    assert w0 * a == a * w0.scale(Q_INV)
    assert w0 * b == b * w0.scale(Q)
    assert w1 * a == a * w1.scale(Q ** -2)
    # Pushing a product equals pushing the factors one after the other
    assert push_left(push_left(w1, a), b) == push_left(w1, a * b)


def test_oneform_basics():
    calc = make_calculus(THREE_D)
    with pytest.raises(KeyError):
        OneForm.basis(calc, 'w4')

    form = differential(generator('a'), calc)
    assert not form.is_invariant()
    with pytest.raises(ValueError):
        form.scalar_vector()

    assert (form - form).is_zero()
    assert form.drop('w2') == OneForm(calc, {'w1': generator('a')})
    assert OneForm.basis(calc, 'w1').scalar_vector() == [ZERO, ONE, ZERO]


@pytest.mark.parametrize('calculus_id', CALCULUS_IDS)
def test_verify_calculus_passes(calculus_id):
    calc = make_calculus(calculus_id)
    records = verify_calculus(calc, seed=1, num_samples=10)
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]

    checks = [record.check for record in records]
    assert checks.count('d_relation') == 7
    assert checks.count('omega_gamma') == len(calc.right_ideal)
    for name in ['absorption', 'push_associativity', 'star_consistency', 'leibniz', 'omega_gamma_rank']:
        assert name in checks


@pytest.mark.parametrize('calculus_id', CALCULUS_IDS)
def test_right_ideal_absorbs_monomials(calculus_id):
    calc = make_calculus(calculus_id)
    for g in calc.right_ideal:
        for y in ['a', 'b*c', 'c*d', 'a*a']:
            assert omega_gamma(ideal_element(g) * parse_element(y), calc).is_zero()

    records = verify_calculus(calc, seed=3, num_samples=10)
    absorption = [record for record in records if record.check == 'absorption']
    assert len(absorption) == 1
    assert absorption[0].passed
    assert absorption[0].witness == '10 samples'


def test_three_d_right_ideal_has_six_generators():
    records = verify_calculus(make_calculus(THREE_D), num_samples=5)
    ideal_records = [record for record in records if record.check == 'omega_gamma']
    assert len(ideal_records) == 6
    assert all(record.passed for record in ideal_records)


def test_quotient_calculi_contain_the_extra_ideal_element():
    assert len(make_calculus(FOUR_D_MINUS).right_ideal) == 9
    for calculus_id, sign in [(Q3_PLUS, 1), (Q3_MINUS, -1)]:
        calc = make_calculus(calculus_id)
        assert len(calc.right_ideal) == 10
        g = generator('a') + generator('d').scale(Q * sign)
        assert g in calc.right_ideal
        assert not counit(ideal_element(g))


def test_broken_commutation_table_is_detected():
    calc = make_calculus(THREE_D)
    broken = replace_commutation(calc, 'w1', 'a', {'w1': generator('a').scale(Q)})
    records = verify_calculus(broken, num_samples=10)
    assert not all_passed(records)
    # The original descriptor is untouched
    assert all_passed(verify_calculus(calc, num_samples=5))


def test_differential_word_agrees_with_differential():
    calc = make_calculus(THREE_D)
    word = ['b', 'a', 'd']
    element = parse_element('b*a*d')
    assert differential_word(word, calc) == differential(element, calc)


def test_differential_of_inverses():
    calc = make_calculus(THREE_D)
    b, b_inv = generator('b'), generator('b-')
    # d(b b^-1) = b d(b^-1) + d(b) b^-1 = 0
    total = b * differential(b_inv, calc) + push_left(differential(b, calc), b_inv)
    assert total.is_zero()

    with pytest.raises(LocalizationError):
        differential(b_inv, make_calculus(FOUR_D_PLUS))


@pytest.mark.parametrize('calculus_id', [THREE_D, FOUR_D_PLUS, Q3_MINUS])
def test_star_form_is_involutive(calculus_id):
    calc = make_calculus(calculus_id)
    form = generator('a') * differential(generator('c'), calc)
    assert star_form(star_form(form)) == form


@pytest.mark.parametrize('sign', [1, -1])
def test_verify_quotient_reduction(sign):
    record = verify_quotient_reduction(sign, seed=3, num_samples=15)
    assert record.passed
    assert record.calculus == (Q3_PLUS if sign == 1 else Q3_MINUS)


def test_omega_gamma_rejects_localized_elements():
    with pytest.raises(LocalizationError):
        omega_gamma(generator('b-'), make_calculus(THREE_D))


def test_calculus_descriptor_render():
    calc = make_calculus(THREE_D)
    content = calc.render()
    lines = content.splitlines()
    assert lines[0] == 'calculus 3D with forms w0, w1, w2'
    assert any(line.startswith('  right ideal: ') for line in lines)
    # one line per differential, per commutation rule and per form
    assert len(lines) == 1 + 4 + len(calc.commutation_table) + 3 + 1
