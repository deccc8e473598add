import numpy as np
import pytest

from qcalc.suq2 import generator, one, star
from qcalc.fodc import THREE_D, FOUR_D_PLUS, Q3_PLUS, Q3_MINUS
from qcalc.fodc import make_calculus
from qcalc.report import HOLDS, CORRECTED, MEASURED, FAILED
from qcalc.report import all_passed
from qcalc.oprep.lattice import LatticeWindow
from qcalc.oprep.builders import FSpec, RepConfig
from qcalc.oprep.builders import build_rep, build_F, represent, standard_spec, remark4_spec
from qcalc.oprep.builders import copy_shift_qk, diag_q2k, convolution
from qcalc.oprep.checks import FORM_GENERATORS
from qcalc.oprep.checks import omega, commutator_d, invariant_forms
from qcalc.oprep.checks import verify_omega_vanishing, measure_omega, invariant_forms_check
from qcalc.oprep.checks import faithfulness_rank, sphere_closed_forms, sphere_commutator_check
from qcalc.oprep.checks import bimodule_check, star_rep_check, level_law_check, consistency_check
from qcalc.oprep.checks import omega_linearity

from .util import LOG

WINDOW = LatticeWindow(n_max=8, k_min=-8, k_max=8)


@pytest.fixture(scope='module')
def standard():
    rep = build_rep(RepConfig(window=WINDOW))
    F = build_F(rep, standard_spec())
    return rep, F


def test_omega_vanishes_on_constants(standard):
    rep, F = standard
    assert not omega(rep, F, one()).toarray().any()


def test_omega_of_generators_matches_invariant_forms(standard):
    rep, F = standard
    forms = invariant_forms(rep, F)
    assert set(forms) == set(FORM_GENERATORS)
    for form, name in FORM_GENERATORS.items():
        difference = forms[form] - omega(rep, F, generator(name))
        assert not difference.toarray().any()


def test_omega_is_linear_in_F(standard):
    rep, F = standard
    other = build_F(rep, standard_spec(convolution([0.5, 0.0, 0.5])))
    assert omega_linearity(rep, F, other, generator('b') * generator('a')) < 1e-6


def test_verify_omega_vanishing_for_three_d(standard):
    rep, F = standard
    calc = make_calculus(THREE_D)
    records = verify_omega_vanishing(rep, F, calc, logger=LOG)
    assert len(records) == len(calc.right_ideal)
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]
    for record in records:
        assert record.variant == 'THEOREM_1'
        assert record.window['n_max'] == 8


def test_verify_omega_vanishing_with_r_double_prime():
    rep = build_rep(RepConfig(window=WINDOW))
    F = build_F(rep, standard_spec(convolution([0.3, 0.0, 0.3])))
    records = verify_omega_vanishing(rep, F, make_calculus(THREE_D))
    assert all_passed(records)


def test_measure_omega_does_not_judge(standard):
    rep, F = standard
    calc = make_calculus(FOUR_D_PLUS)
    records = measure_omega(rep, F, calc)
    assert len(records) == len(calc.right_ideal)
    for record in records:
        assert record.status == MEASURED
        assert record.passed
        assert record.max_residual >= 0


def test_invariant_forms_check(standard):
    rep, F = standard
    records = invariant_forms_check(rep, F)
    assert len(records) == 4
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]


def test_commutator_d_commutes_with_star(standard):
    # F is symmetric, so d(x*) = d(x)*
    rep, F = standard
    x = generator('b')
    difference = commutator_d(rep, F, star(x)) - commutator_d(rep, F, x).adjoint()
    assert rep.residual(difference) < 1e-10


def test_faithfulness_rank_of_standard_operator(standard):
    rep, F = standard
    result = faithfulness_rank(rep, F, degree=1, logger=LOG)
    # 5 monomials of degree at most one times 3 forms
    assert result.num_columns == 15
    assert result.rank == 10
    assert not result.full

    record = result.record(expected_rank=10, variant='THEOREM_1')
    assert record.status == HOLDS
    assert record.check == 'faithfulness_rank'
    assert 'rank deficit 5' in record.detail

    assert result.record(expected_rank=15).status == FAILED
    assert result.record().status == MEASURED


def test_faithfulness_rank_without_r_prime_drops_the_omega_a_block(standard):
    rep, _ = standard
    F = build_F(rep, FSpec(T=standard_spec().T))
    forms = invariant_forms(rep, F)
    # Omega(a) is only round-off and must not be counted
    assert rep.residual(forms['w1']) < 1e-10

    result = faithfulness_rank(rep, F, degree=1)
    assert result.num_columns == 15
    assert result.rank == 5
    assert result.record(expected_rank=5).status == HOLDS


def test_faithfulness_rank_of_copy_shifting_operator():
    window = LatticeWindow(n_max=8, k_min=-8, k_max=8, l_max=3)
    rep = build_rep(RepConfig(window=window))
    q = window.q
    F = build_F(rep, FSpec(T=copy_shift_qk(np.sqrt(1 + q ** 2)), R_prime=diag_q2k()))
    result = faithfulness_rank(rep, F, degree=1)
    assert result.full

    F = build_F(rep, FSpec(T=copy_shift_qk(np.sqrt(1 + q ** 2))))
    result = faithfulness_rank(rep, F, degree=1)
    assert result.rank == 10


def test_sphere_closed_forms():
    forms = sphere_closed_forms()
    assert [name for name, *_ in forms] == ['d(x+)', 'd(x-)', 'd(y0) via pi(a), pi(d)', 'd(y0) via pi(b), pi(c)']
    # The corrected forms only swap T and T*
    for _, _, printed, corrected in forms:
        if corrected is not None:
            assert [term[1] for term in printed] == [term[1] for term in corrected]
            assert [term[2] for term in printed] != [term[2] for term in corrected]


def test_sphere_commutator_check(standard):
    rep, F = standard
    records = sphere_commutator_check(rep, F, logger=LOG)
    # four closed forms, their agreement and the two reconstructions of T
    assert len(records) == 7
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]
    assert all(record.status in (HOLDS, CORRECTED) for record in records)
    assert [record.check for record in records].count('reconstruct_T') == 2


def test_bimodule_check(standard):
    rep, F = standard
    records = bimodule_check(rep, F)
    assert len(records) == 16
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]


def test_star_rep_check(standard):
    rep, F = standard
    record = star_rep_check(rep, F, seed=1, num_samples=100)
    assert record.passed
    assert record.witness.startswith('100 samples')


def test_level_law_check(standard):
    rep, F = standard
    records = level_law_check(rep, F, num_levels=3)
    assert len(records) == 3
    assert all_passed(records)


def test_consistency_check_for_theorem_variant(standard):
    rep, F = standard
    records = consistency_check(rep, F, logger=LOG)
    # symmetry, *-representation, four levels and 16 bimodule relations
    assert len(records) == 22
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]


@pytest.mark.parametrize('epsilon, calculus_id', [(1, Q3_PLUS), (-1, Q3_MINUS)])
def test_remark4_operator_is_commutator_representation_of_quotient(epsilon, calculus_id):
    rep = build_rep(RepConfig(window=WINDOW))
    F = build_F(rep, remark4_spec(epsilon))
    records = verify_omega_vanishing(rep, F, make_calculus(calculus_id))
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]

    records = consistency_check(rep, F)
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]
    assert records[-1].check == 'omega_vanishing'
    assert records[-1].variant == f'REMARK_4({epsilon:+d})'


def test_represent_of_sum_is_sum_of_represents(standard):
    rep, _ = standard
    x, y = generator('a'), generator('c') * generator('d')
    difference = represent(rep, x + y) - represent(rep, x) - represent(rep, y)
    assert rep.residual(difference) < 1e-12
