import numpy as np
import pytest

from qcalc.suq2 import LocalizationError
from qcalc.suq2 import generator, one, star, normal_form
from qcalc.oprep.lattice import LatticeWindow
from qcalc.oprep.lattice import interior_residual
from qcalc.oprep.builders import THEOREM_1, REMARK_4, DISK
from qcalc.oprep.builders import OperatorRecipe, FSpec, RepConfig, SpecViolationError
from qcalc.oprep.builders import shift_qk, copy_shift_qk, identity, parity, diag_geometric, diag_q2k
from qcalc.oprep.builders import convolution, zero
from qcalc.oprep.builders import materialize, standard_spec, remark4_spec, disk_spec
from qcalc.oprep.builders import build_rep, represent, build_F, build, check_f_spec, decompose_R

WINDOW = LatticeWindow(n_max=6, k_min=-6, k_max=6)


def test_operator_recipe_validation():
    with pytest.raises(ValueError):
        OperatorRecipe('rotation')

    with pytest.raises(ValueError):
        OperatorRecipe('diag_geometric')

    with pytest.raises(ValueError):
        convolution([0.3, 0.3])

    assert diag_geometric('-1/q').render() == 'diag_geometric ratio=-1/q'
    assert 'coefficient=2.0' in shift_qk(2.0).render()


def test_materialize_shift_qk():
    level = WINDOW.level_window()
    T = materialize(shift_qk(), level)
    assert T.radius == (0, 1, 0)
    matrix = T.toarray()
    # T e_k = q^k e_{k-1}
    assert matrix[level.index(0, 2), level.index(0, 3)] == pytest.approx(0.5 ** 3)
    assert matrix[level.index(0, -3), level.index(0, -2)] == pytest.approx(4.0)
    assert np.count_nonzero(matrix) == level.num_k - 1


def test_materialize_copy_shift_lowers_the_copy_index():
    window = LatticeWindow(n_max=1, k_min=-2, k_max=2, l_max=3)
    T = materialize(copy_shift_qk(), window)
    assert T.radius == (0, 1, 1)
    matrix = T.toarray()
    assert matrix[window.index(0, 0, 1), window.index(0, 1, 2)] == pytest.approx(0.5)
    # Nothing is mapped below the copy l = 0
    for k in window.k_values():
        assert not np.any(matrix[:, window.index(0, int(k), 0)])


def test_materialize_diagonal_recipes():
    level = WINDOW.level_window()
    k = level.k_values()
    assert np.allclose(np.diag(materialize(identity(), level).toarray()), 1)
    assert np.allclose(np.diag(materialize(parity(), level).toarray()), (-1.0) ** k)
    assert np.allclose(np.diag(materialize(diag_q2k(), level).toarray()), 0.25 ** k)
    assert np.allclose(np.diag(materialize(diag_geometric('-1/q'), level).toarray()), (-2.0) ** k)
    assert not materialize(zero(), level).toarray().any()


def test_materialize_convolution():
    level = WINDOW.level_window()
    R = materialize(convolution([0.3, 1.0, 0.2]), level)
    assert R.radius == (0, 1, 0)
    matrix = R.toarray()
    # e_k -> sum_r alpha_r e_{k-r}
    column = matrix[:, level.index(0, 0)]
    assert column[level.index(0, 0)] == pytest.approx(1.0)
    assert column[level.index(0, -1)] == pytest.approx(0.2)
    assert column[level.index(0, 1)] == pytest.approx(0.3)


def test_f_spec_labels_and_parameters():
    assert standard_spec().label == THEOREM_1
    assert remark4_spec(-1).label == 'REMARK_4(-1)'
    assert disk_spec().label == DISK

    theta, mu = standard_spec().parameters(0.5)
    assert (theta, mu) == (0.5, 0.25)
    theta, mu = remark4_spec(-1).parameters(0.5)
    assert (theta, mu) == (-1.0, -2.0)

    with pytest.raises(ValueError):
        FSpec(T=identity(), variant='THEOREM_2')

    with pytest.raises(ValueError):
        FSpec(T=identity(), variant=REMARK_4, epsilon=0)


def test_representation_generators():
    rep = build_rep(RepConfig(window=WINDOW))
    assert rep.sector_dim == 0
    assert rep.dim == WINDOW.dim
    assert set(rep.generators) == {'a', 'b', 'c', 'd', 'b-', 'c-'}

    # pi(c) e_{nk} = q^n e_{n,k-1}
    c = rep.generators['c'].toarray()
    assert c[WINDOW.index(2, 0), WINDOW.index(2, 1)] == pytest.approx(0.25)

    # The defining relation ad - q bc = 1 holds on the interior
    a, b, d = rep.generators['a'], rep.generators['b'], rep.generators['d']
    relation = a @ d - (b @ rep.generators['c']) * 0.5 - rep.identity()
    assert rep.residual(relation) < 1e-12


def test_represent_is_a_star_representation():
    rep = build_rep(RepConfig(window=WINDOW))
    for element in [generator('a'), generator('b'), normal_form(['a', 'b', 'c']), one()]:
        difference = represent(rep, star(element)) - represent(rep, element).adjoint()
        assert rep.residual(difference) < 1e-12

    assert rep.residual(represent(rep, one()) - rep.identity()) == 0.0
    inverse = represent(rep, generator('b-')) @ represent(rep, generator('b')) - rep.identity()
    assert rep.residual(inverse) < 1e-12


def test_representation_with_finite_sector():
    v = np.array([[0, 1], [1, 0]], dtype=complex)
    rep = build_rep(RepConfig(window=WINDOW, v=v))
    assert rep.sector_dim == 2
    assert rep.dim == WINDOW.dim + 2
    assert 'b-' not in rep.generators
    assert np.allclose(rep.generators['a'].toarray()[:2, :2], v)
    assert not rep.generators['b'].toarray()[:2, :2].any()

    with pytest.raises(LocalizationError):
        represent(rep, generator('b-'))


def test_build_rep_rejects_non_unitaries():
    with pytest.raises(SpecViolationError):
        build_rep(RepConfig(window=WINDOW, v=np.array([[2.0]])))

    with pytest.raises(SpecViolationError):
        build_rep(RepConfig(window=WINDOW, w=2 * np.identity(WINDOW.num_k)))

    with pytest.raises(SpecViolationError):
        build_rep(RepConfig(window=WINDOW, w=np.identity(3)))


def test_custom_unitary_w():
    # The bilateral shift given explicitly as a matrix
    w = np.eye(WINDOW.num_k, k=1)
    rep = build_rep(RepConfig(window=WINDOW, w=w))
    default = build_rep(RepConfig(window=WINDOW))
    assert np.allclose(rep.generators['c'].toarray(), default.generators['c'].toarray())


@pytest.mark.parametrize('spec', [
    standard_spec(),
    standard_spec(convolution([0.3, 0.0, 0.3])),
    remark4_spec(1),
    remark4_spec(-1),
    disk_spec(),
])
def test_check_f_spec_accepts_valid_specs(spec):
    rep = build_rep(RepConfig(window=WINDOW))
    for condition, residual in check_f_spec(rep, spec):
        assert residual < 1e-12, condition


def test_build_f_is_symmetric():
    rep, F = build(RepConfig(window=WINDOW))
    assert F.spec.label == THEOREM_1
    assert rep.residual(F - F.adjoint()) < 1e-12
    assert F.radius == (1, 1, 0)
    assert np.allclose(F.R.toarray(), F.R_prime.toarray())


@pytest.mark.parametrize('spec', [
    FSpec(T=identity()),
    FSpec(T=shift_qk(), R_prime=diag_q2k(1j)),
    FSpec(T=shift_qk(), R_prime=parity()),
    FSpec(T=shift_qk(), R_prime=diag_q2k(), variant=DISK),
])
def test_build_f_rejects_violations(spec):
    rep = build_rep(RepConfig(window=WINDOW))
    with pytest.raises(SpecViolationError):
        build_F(rep, spec)

    # Without validation the operator is assembled anyway
    F = build_F(rep, spec, validate=False)
    assert F.dim == rep.dim


def test_build_f_checks_the_sector_operator():
    v = np.array([[0, 1], [1, 0]], dtype=complex)
    rep = build_rep(RepConfig(window=WINDOW, v=v))
    F = build_F(rep, FSpec(T=shift_qk(), R_prime=diag_q2k(), Q=np.zeros((2, 2))))
    assert F.dim == rep.dim

    with pytest.raises(SpecViolationError):
        build_F(rep, FSpec(T=shift_qk(), R_prime=diag_q2k(), Q=np.array([[0, 1j], [0, 0]])))


def test_decompose_r():
    rep = build_rep(RepConfig(window=WINDOW))
    level = WINDOW.level_window()
    R_prime = materialize(diag_q2k(), level)
    R_double_prime = materialize(identity(0.7), level)

    decomposition = decompose_R(R_prime + R_double_prime, rep.w, WINDOW)
    assert interior_residual(decomposition.R_prime - R_prime, level) < 1e-12
    assert interior_residual(decomposition.R_double_prime - R_double_prime, level) < 1e-12
    # The split with the factors 1 / (1 + q^2) does not commute with w
    assert decomposition.printed_residual > 1e-3

    block = decomposition.level(2)
    assert interior_residual(block - (R_prime * 0.5 ** 4 + R_double_prime), level) < 1e-12


def test_decompose_r_rejects_operators_without_the_recurrence():
    rep = build_rep(RepConfig(window=WINDOW))
    with pytest.raises(SpecViolationError):
        decompose_R(materialize(parity(), WINDOW.level_window()), rep.w, WINDOW)
