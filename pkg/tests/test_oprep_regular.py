import numpy as np
import pytest

from qcalc.suq2 import generator, one
from qcalc.report import MEASURED
from qcalc.report import all_passed
from qcalc.oprep.lattice import LatticeWindow, WindowError, WindowTooSmallError
from qcalc.oprep.regular import GRAM_FORMS
from qcalc.oprep.regular import regular_rep, regular_spec, haar_vector, gram_matrix
from qcalc.oprep.regular import expected_gram_diagonal, gram_check

from .util import LOG

# The Haar vector is truncated after n_max levels, which leaves a tail of the squared norm q^(2 n_max)
N_MAX = 30


@pytest.fixture(scope='module')
def regular():
    return regular_rep('1/2', N_MAX, -6, 6, l_max=N_MAX, alpha=1.0, beta=2.0, logger=LOG)


def test_haar_vector():
    window = LatticeWindow(n_max=4, k_min=-1, k_max=1, l_max=4)
    vector = haar_vector(window)
    assert np.linalg.norm(vector) == pytest.approx(1.0)
    assert np.count_nonzero(vector) == 4
    assert vector[window.index(1, 0, 1)] / vector[window.index(0, 0, 0)] == pytest.approx(0.5)

    # The finite sector in front of the lattice stays empty
    assert not haar_vector(window, sector_dim=2)[:2].any()


def test_haar_vector_needs_enough_copies():
    with pytest.raises(WindowError):
        haar_vector(LatticeWindow(n_max=4, k_min=-1, k_max=1, l_max=3))


def test_regular_spec_normalization():
    spec = regular_spec(0.5, alpha=2.0, beta=3.0)
    assert spec.T.name == 'copy_shift_qk'
    assert spec.T.coefficient == pytest.approx(2.0 * np.sqrt(1.25))
    assert spec.R_prime.coefficient == pytest.approx(3.0 * 0.25 * np.sqrt(1 + 0.25 + 0.0625))


def test_haar_state_values(regular):
    assert regular.h(one()) == pytest.approx(1.0)
    for name in 'abc':
        assert abs(regular.h(generator(name))) < 1e-12

    # h(bc) = -q^(-1) h(b b*) is negative
    assert regular.h(generator('b') * generator('c')).real < 0


def test_expected_gram_diagonal():
    diagonal = expected_gram_diagonal(0.5, 1.0, 2.0)
    factor = 0.75 ** 2
    assert np.allclose(diagonal, [0.0625 * factor, 4 * factor, factor])


def test_gram_matrix_is_diagonal(regular):
    gram = gram_matrix(regular)
    assert gram.shape == (3, 3)
    assert np.allclose(gram, gram.conj().T)
    assert np.allclose(gram - np.diag(np.diag(gram)), 0, atol=1e-10)
    assert np.allclose(np.real(np.diag(gram)), expected_gram_diagonal(0.5, 1.0, 2.0), atol=1e-10)


def test_gram_check(regular):
    records = gram_check(regular)
    assert all_passed(records), [r.to_dict() for r in records if not r.passed]
    assert records[-1].status == MEASURED
    assert 'ratio <w0, w0> / <w2, w2> = 0.0625' in records[-1].detail

    witnesses = [record.witness for record in records]
    assert 'h(1) = 1' in witnesses
    assert len([w for w in witnesses if w.startswith(f'<{GRAM_FORMS[1]}, ')]) == 1


def test_regular_rep_needs_room_for_the_r_conditions():
    # The condition w^2 R w*^2 + mu R = (1 + mu) w R w* reaches four steps in k
    with pytest.raises(WindowTooSmallError):
        regular_rep('1/2', 6, -3, 3, l_max=6)

    reg = regular_rep('1/2', 6, -5, 5, l_max=6)
    assert reg.rep.window.k_min == -5
