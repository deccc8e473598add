import numpy as np
import pytest
from scipy import sparse

from qcalc.qscalar import QRangeError
from qcalc.typing import assert_window_dict
from qcalc.oprep.lattice import LatticeWindow, LatticeOperator
from qcalc.oprep.lattice import WindowError, WindowTooSmallError
from qcalc.oprep.lattice import interior_mask, interior_residual, restrict_columns, column_norms, band_radius
from qcalc.oprep.lattice import lowering_matrix, shift_matrix, diagonal_matrix, level_lambdas


def test_lattice_window_basically_works():
    window = LatticeWindow(n_max=3, k_min=-2, k_max=2)
    assert window.num_k == 5
    assert window.num_copies == 1
    assert window.level_dim == 5
    assert window.dim == 15
    assert window.q == pytest.approx(0.5)
    assert window.index(0, -2) == 0
    assert window.index(1, 0) == 7

    n, k, l = window.grid()
    assert len(n) == window.dim
    assert (n[7], k[7], l[7]) == (1, 0, 0)

    level = window.level_window()
    assert level.n_max == 1
    assert level.dim == 5


def test_lattice_window_with_copies():
    window = LatticeWindow(n_max=2, k_min=-1, k_max=1, l_max=3, q_value='1/3')
    assert window.num_copies == 3
    assert window.dim == 2 * 3 * 3
    n, k, l = window.grid()
    index = window.index(1, 1, 2)
    assert (n[index], k[index], l[index]) == (1, 1, 2)


def test_lattice_window_to_dict():
    data = LatticeWindow(n_max=4, k_min=-3, k_max=3, q_value='2/3').to_dict()
    assert_window_dict(data)
    assert data['q'] == '2/3'
    assert data['l_max'] == 0


@pytest.mark.parametrize('kwargs', [
    dict(n_max=0, k_min=-1, k_max=1),
    dict(n_max=2, k_min=0, k_max=3),
    dict(n_max=2, k_min=-3, k_max=0),
    dict(n_max=2, k_min=-1, k_max=1, l_max=-1),
])
def test_lattice_window_rejects_invalid_bounds(kwargs):
    with pytest.raises(WindowError):
        LatticeWindow(**kwargs)


def test_lattice_window_rejects_invalid_q():
    with pytest.raises(QRangeError):
        LatticeWindow(n_max=2, k_min=-1, k_max=1, q_value='1')


def test_interior_mask():
    window = LatticeWindow(n_max=3, k_min=-2, k_max=2)
    mask = interior_mask(window, (1, 1, 0))
    assert mask.shape == (15, )
    # n in {0, 1} and k in {-1, 0, 1}
    assert mask.sum() == 6
    assert mask[window.index(0, 0)]
    assert not mask[window.index(2, 0)]
    assert not mask[window.index(0, 2)]

    # The finite sector is always included
    mask = interior_mask(window, (1, 1, 0), sector_dim=2)
    assert mask.shape == (17, )
    assert mask[0] and mask[1]
    assert mask.sum() == 8


def test_restrict_columns():
    window = LatticeWindow(n_max=3, k_min=-2, k_max=2)
    restricted = restrict_columns(LatticeOperator.identity(window.dim), window, (1, 1, 0))
    assert isinstance(restricted, sparse.csc_matrix)
    assert restricted.shape == (15, 6)

    # The columns of the identity are the unit vectors of the interior
    columns = np.flatnonzero(interior_mask(window, (1, 1, 0)))
    array = restricted.toarray()
    assert np.all(array[columns, np.arange(6)] == 1)
    assert array.sum() == 6


def test_interior_mask_raises_for_empty_interior():
    window = LatticeWindow(n_max=2, k_min=-1, k_max=1)
    with pytest.raises(WindowTooSmallError):
        interior_mask(window, (2, 0, 0))

    with pytest.raises(WindowTooSmallError):
        interior_mask(window, (0, 2, 0))


def test_elementary_matrices():
    shift = shift_matrix(4)
    vector = np.array([0, 0, 1, 0])
    # e_2 -> e_1
    assert np.allclose(shift @ vector, [0, 1, 0, 0])
    assert band_radius(shift) == 1
    assert band_radius(sparse.csc_matrix((3, 3))) == 0

    lowering = lowering_matrix(np.array([5.0, 1.0, 2.0]))
    assert np.allclose(lowering.toarray(), [[0, 1, 0], [0, 0, 2], [0, 0, 0]])
    assert lowering_matrix(np.array([1.0])).shape == (1, 1)

    diagonal = diagonal_matrix([1, 2, 3])
    assert np.allclose(column_norms(diagonal), [1, 2, 3])


def test_level_lambdas():
    window = LatticeWindow(n_max=3, k_min=-1, k_max=1)
    lambdas = level_lambdas(window)
    assert lambdas[0] == 0
    assert lambdas[1] == pytest.approx(np.sqrt(0.75))
    assert lambdas[2] == pytest.approx(np.sqrt(1 - 0.5 ** 4))


def test_lattice_operator_arithmetic():
    shift = LatticeOperator.from_matrix(shift_matrix(5), (0, 1, 0))
    identity = LatticeOperator.identity(5)
    assert shift.dim == 5

    product = shift @ shift.adjoint()
    assert product.radius == (0, 2, 0)
    assert (shift + identity).radius == (0, 1, 0)

    scaled = shift * -2.0
    assert np.allclose(scaled.toarray(), -2 * shift.toarray())
    # The scale tracks the absolute values
    assert np.allclose(scaled.scale.toarray(), 2 * shift.toarray())
    assert np.allclose((2.0 * shift).toarray(), (shift * 2.0).toarray())
    assert np.allclose((shift / 2).toarray(), shift.toarray() / 2)

    difference = shift - shift
    assert np.allclose(difference.toarray(), 0)
    assert np.allclose(difference.scale.toarray(), 2 * shift.toarray())

    with pytest.raises(TypeError):
        shift * identity


def test_interior_residual_ignores_truncation_boundary():
    window = LatticeWindow(n_max=1, k_min=-3, k_max=3)
    shift = LatticeOperator.from_matrix(shift_matrix(window.dim), (0, 1, 0))
    identity = LatticeOperator.identity(window.dim)

    # w w* = 1 fails only on the column of k_max, which is outside of the interior
    operator = shift @ shift.adjoint() - identity
    assert np.abs(operator.toarray()).max() == pytest.approx(1.0)
    assert interior_residual(operator, window) == pytest.approx(0.0)
    assert interior_residual(operator, window, radius=(0, 0, 0)) > 0.1

    assert interior_residual(LatticeOperator.zero(window.dim), window) == 0.0
