"""
Numeric verification of the operator identities of commutator representations.

For a representation pi and a symmetric operator F the maps

.. code-block:: text

    Omega(x) = pi(S(x_(1))) F pi(x_(2)) - counit(x) F
    d(x) = i (F pi(x) - pi(x) F)

define a calculus on the algebra, and this calculus is a quotient of a given covariant calculus exactly if
Omega vanishes on the generators of its right ideal. Every check here evaluates an identity between
operators on the interior of the truncation window and reports its relative residual.
"""
import random
import logging
import dataclasses
import typing as t

import numpy as np
from scipy import sparse

from qcalc.qscalar import Q
from qcalc.qscalar import evaluate_float, epsilon_scalar
from qcalc.suq2 import AlgebraElement
from qcalc.suq2 import GENERATORS
from qcalc.suq2 import generator, normal_form, star, omega_word, render_element, pbw_monomials
from qcalc.fodc import CalculusDescriptor
from qcalc.fodc import THREE_D, make_calculus, differential, push_left
from qcalc.sphere import sphere_generators
from qcalc.report import CheckRecord, CORRECTED, FAILED, HOLDS, MEASURED
from qcalc.report import numeric_record
from qcalc.config import DEFAULT_TOLERANCE
from qcalc.oprep.lattice import LatticeOperator
from qcalc.oprep.lattice import restrict_columns
from qcalc.oprep.builders import Representation, FOperator
from qcalc.oprep.builders import THEOREM_1, REMARK_4
from qcalc.oprep.builders import represent
from qcalc.util import NULL_LOGGER

# The basis forms of the 3D calculus and the generators whose invariant forms they are
FORM_GENERATORS = {'w0': 'b', 'w1': 'a', 'w2': 'c'}

# The threshold of the numeric rank, relative to the largest singular value and to the largest column norm
RANK_THRESHOLD = 1e-8


def omega(rep: Representation, F: LatticeOperator, x: AlgebraElement) -> LatticeOperator:
    """
    Returns the operator Omega(x) = pi(S(x_(1))) F pi(x_(2)) - counit(x) F, which is expanded from the
    symbolic word of x.
    """
    result = LatticeOperator.zero(rep.dim)
    for (left, right), coefficient in omega_word(x).items():
        value = evaluate_float(coefficient, rep.window.q_value)
        result = result + (rep.monomial_operator(left) @ F @ rep.monomial_operator(right)) * value

    return result


def commutator_d(rep: Representation, F: LatticeOperator, x: AlgebraElement) -> LatticeOperator:
    X = represent(rep, x)
    return (F @ X - X @ F) * 1j


def _numeric(rep: Representation,
             F: FOperator,
             check: str,
             operator: LatticeOperator,
             tolerance: float,
             witness: str,
             calculus: t.Optional[str] = None,
             detail: t.Optional[str] = None,
             ) -> CheckRecord:
    return numeric_record(
        check=check,
        residual=rep.residual(operator),
        tolerance=tolerance,
        witness=witness,
        calculus=calculus,
        variant=F.spec.label if F.spec else None,
        mask_radius=operator.radius,
        window=rep.window.to_dict(),
        detail=detail,
    )


def verify_omega_vanishing(rep: Representation,
                           F: FOperator,
                           calc: CalculusDescriptor,
                           tolerance: float = DEFAULT_TOLERANCE,
                           logger: logging.Logger = NULL_LOGGER,
                           ) -> t.List[CheckRecord]:
    """
    Evaluates Omega on every generator of the right ideal of the calculus. The records pass if the operator
    representation is a commutator representation of the calculus.
    """
    logger.info(f'evaluating Omega on the {len(calc.right_ideal)} right ideal generators of {calc.id}')
    return [
        _numeric(rep, F, 'omega_vanishing', omega(rep, F, g), tolerance, render_element(g), calculus=calc.id)
        for g in calc.right_ideal
    ]


def measure_omega(rep: Representation,
                  F: FOperator,
                  calc: CalculusDescriptor,
                  ) -> t.List[CheckRecord]:
    """
    Like :func:`verify_omega_vanishing`, but the residuals are only reported as measurements. This is used
    for pairs of operators and calculi which are not expected to match, e.g. a 3D operator F against the
    right ideal of a 4D calculus.
    """
    records = []
    for g in calc.right_ideal:
        operator = omega(rep, F, g)
        records.append(CheckRecord(
            check='omega_measured',
            calculus=calc.id,
            variant=F.spec.label if F.spec else None,
            witness=render_element(g),
            status=MEASURED,
            max_residual=rep.residual(operator),
            mask_radius=tuple(operator.radius),
            window=rep.window.to_dict(),
        ))

    return records


def invariant_forms(rep: Representation, F: LatticeOperator) -> t.Dict[str, LatticeOperator]:
    """
    Returns the images Omega_j of the basis forms of the 3D calculus by the name of the form.
    """
    return {form: omega(rep, F, generator(name)) for form, name in FORM_GENERATORS.items()}


def invariant_forms_check(rep: Representation,
                          F: FOperator,
                          tolerance: float = DEFAULT_TOLERANCE,
                          ) -> t.List[CheckRecord]:
    """
    Compares the images of the invariant forms with their closed forms

    .. code-block:: text

        Omega(b) = lambda pi(b) T
        Omega(c) = -lambda pi(c) T*
        Omega(a) = q^-2 lambda pi(bc) R'
        Omega(a) = -q^-2 Omega(d)
    """
    q = rep.q
    lam = q - 1 / q
    forms = invariant_forms(rep, F)
    T = rep.lift(F.T)
    T_ = rep.lift(F.T.adjoint())
    R_prime = rep.lift(F.R_prime)
    b, c = rep.generators['b'], rep.generators['c']

    claims = [
        ('Omega(b) = lambda pi(b) T', forms['w0'] - (b @ T) * lam),
        ('Omega(c) = -lambda pi(c) T*', forms['w2'] + (c @ T_) * lam),
        ("Omega(a) = q^-2 lambda pi(bc) R'", forms['w1'] - (b @ c @ R_prime) * (lam / q ** 2)),
        ('Omega(a) = -q^-2 Omega(d)', forms['w1'] + omega(rep, F, generator('d')) / q ** 2),
    ]
    return [_numeric(rep, F, 'invariant_forms', operator, tolerance, witness, calculus=THREE_D)
            for witness, operator in claims]


@dataclasses.dataclass(frozen=True)
class RankResult:
    """
    :ivar rank: The numeric rank of the matrix of the vectorized operators pi(m) Omega_j
    :ivar num_columns: The number of operators
    :ivar degree: The degree bound of the monomials m
    :ivar singular_values: The singular values in descending order
    """
    rank: int
    num_columns: int
    degree: int
    singular_values: np.ndarray

    @property
    def full(self) -> bool:
        return self.rank == self.num_columns

    def record(self,
               expected_rank: t.Optional[int] = None,
               variant: t.Optional[str] = None,
               window: t.Optional[dict] = None,
               label: str = '',
               ) -> CheckRecord:
        if expected_rank is None:
            status = MEASURED
        else:
            status = HOLDS if self.rank == expected_rank else FAILED

        return CheckRecord(
            check='faithfulness_rank',
            calculus=THREE_D,
            variant=variant,
            witness=f'{label}rank {self.rank} of {self.num_columns}',
            status=status,
            window=window,
            detail=(f'monomials up to degree {self.degree}, '
                    f'{"full rank" if self.full else "rank deficit " + str(self.num_columns - self.rank)}'
                    + ('' if expected_rank is None else f', expected rank {expected_rank}')),
        )


def faithfulness_rank(rep: Representation,
                      F: LatticeOperator,
                      degree: int,
                      threshold: float = RANK_THRESHOLD,
                      logger: logging.Logger = NULL_LOGGER,
                      ) -> RankResult:
    """
    Computes the numeric rank of the family of operators pi(m) Omega_j for all PBW monomials m of degree at
    most ``degree`` and the three invariant forms. Each operator is restricted to the interior columns of
    the largest support radius of the family and flattened into one column of the matrix.

    Columns whose norm is at most ``threshold`` times the largest column norm are round-off and count as
    zero. The remaining columns are scaled to unit norm before the singular values are taken.

    :raises WindowTooSmallError: If the window has no interior for the largest radius
    """
    forms = invariant_forms(rep, F)
    operators = []
    for monomial in pbw_monomials(degree):
        for form in ('w0', 'w1', 'w2'):
            operators.append(rep.monomial_operator(monomial) @ forms[form])

    radius = tuple(max(op.radius[i] for op in operators) for i in range(3))
    restricted = [sparse.coo_matrix(restrict_columns(op, rep.window, radius, rep.sector_dim))
                  for op in operators]
    num_interior = restricted[0].shape[1]
    logger.info(f'computing the rank of {len(operators)} operators on {num_interior} interior vectors')

    rows, cols, values = [], [], []
    for index, block in enumerate(restricted):
        rows.append(block.row.astype(np.int64) * num_interior + block.col)
        cols.append(np.full(block.nnz, index))
        values.append(block.data)

    rows, cols, values = np.concatenate(rows), np.concatenate(cols), np.concatenate(values)
    # Only the rows in which some operator is nonzero contribute to the rank
    used_rows, row_index = np.unique(rows, return_inverse=True)
    matrix = sparse.coo_matrix((values, (row_index, cols)), shape=(len(used_rows), len(operators))).toarray()

    norms = np.linalg.norm(matrix, axis=0)
    negligible = norms <= threshold * np.max(norms, initial=0.0)
    matrix[:, negligible] = 0.0
    matrix = matrix / np.where(negligible, 1.0, norms)
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    largest = singular_values[0] if len(singular_values) else 0.0
    rank = int(np.sum(singular_values > threshold * largest)) if largest > 0 else 0

    return RankResult(rank=rank, num_columns=len(operators), degree=degree, singular_values=singular_values)


# == CLOSED FORMS ON THE SPHERE ==

# A closed form is a list of terms (coefficient, letter, "T" or "T*", sphere generator) which stand for
# coefficient * pi(letter) T pi(generator), the coefficient being a function of q.
ClosedForm = t.List[t.Tuple[t.Callable[[float], complex], str, str, str]]


def sphere_closed_forms() -> t.List[t.Tuple[str, str, ClosedForm, t.Optional[ClosedForm]]]:
    """
    Returns the published closed forms of the differentials of the sphere generators as tuples
    (name, generator, printed form, corrected form). The corrected form is None where the printed one holds.
    """
    def lam(q): return q - 1 / q

    return [
        ('d(x+)', 'x+', [
            (lambda q: 1j * lam(q) / q, 'a', 'T', 'x+'),
            (lambda q: -1j * lam(q), 'b', 'T*', 'y0'),
        ], None),
        ('d(x-)', 'x-', [
            (lambda q: -1j * q * lam(q), 'd', 'T', 'x-'),
            (lambda q: 1j * lam(q), 'c', 'T', 'y0'),
        ], [
            (lambda q: -1j * q * lam(q), 'd', 'T*', 'x-'),
            (lambda q: 1j * lam(q), 'c', 'T', 'y0'),
        ]),
        ('d(y0) via pi(a), pi(d)', 'y0', [
            (lambda q: 1j * lam(q) / q, 'a', 'T', 'y0'),
            (lambda q: -1j * q * lam(q), 'd', 'T', 'y0'),
        ], [
            (lambda q: 1j * lam(q) / q, 'a', 'T', 'y0'),
            (lambda q: -1j * q * lam(q), 'd', 'T*', 'y0'),
        ]),
        ('d(y0) via pi(b), pi(c)', 'y0', [
            (lambda q: 1j * lam(q), 'c', 'T', 'x+'),
            (lambda q: -1j * lam(q), 'b', 'T*', 'x-'),
        ], None),
    ]


def _closed_form_operator(rep: Representation, F: FOperator, form: ClosedForm) -> LatticeOperator:
    generators = sphere_generators()
    blocks = {'T': rep.lift(F.T), 'T*': rep.lift(F.T.adjoint())}
    result = LatticeOperator.zero(rep.dim)
    for coefficient, letter, block, name in form:
        term = rep.generators[letter] @ blocks[block] @ represent(rep, generators.by_name(name))
        result = result + term * coefficient(rep.q)
    return result


def _render_closed_form(form: ClosedForm) -> str:
    return ' + '.join(f'c*pi({letter}){block}pi({name})' for _, letter, block, name in form)


def sphere_commutator_check(rep: Representation,
                            F: FOperator,
                            tolerance: float = DEFAULT_TOLERANCE,
                            logger: logging.Logger = NULL_LOGGER,
                            ) -> t.List[CheckRecord]:
    """
    Compares the commutators d(x+), d(x-), d(y0) with their published closed forms in terms of T and T*.
    A closed form which fails as printed is checked again with T replaced by T* where that is forced and
    reported as "corrected". Without a finite sector, T and T* are also reconstructed from the commutators
    of the localized elements d b^-1 and a c^-1:

    .. code-block:: text

        T  =  i lambda^-1 pi(b) d(d b^-1)
        T* = -i lambda^-1 pi(c) d(a c^-1)
    """
    generators = sphere_generators()
    records = []
    closed_operators = {}
    for name, element_name, printed, corrected in sphere_closed_forms():
        logger.info(f'checking the closed form of {name}')
        commutator = commutator_d(rep, F, generators.by_name(element_name))
        difference = commutator - _closed_form_operator(rep, F, printed)
        record = _numeric(rep, F, 'sphere_commutator', difference, tolerance, name, calculus=THREE_D,
                          detail=f'printed: {_render_closed_form(printed)}')
        closed_operators[name] = _closed_form_operator(rep, F, corrected or printed)

        if not record.passed and corrected is not None:
            corrected_difference = commutator - closed_operators[name]
            residual = rep.residual(corrected_difference)
            detail = (f'printed form fails with residual {record.max_residual:.2e}, corrected: '
                      f'{_render_closed_form(corrected)}')
            logger.warning(f'closed form of {name}: {detail}')
            record = dataclasses.replace(
                record,
                status=CORRECTED if residual < tolerance else FAILED,
                max_residual=residual,
                mask_radius=tuple(corrected_difference.radius),
                detail=detail,
            )

        records.append(record)

    agreement = closed_operators['d(y0) via pi(a), pi(d)'] - closed_operators['d(y0) via pi(b), pi(c)']
    records.append(_numeric(rep, F, 'sphere_commutator', agreement, tolerance,
                            'both closed forms of d(y0) agree', calculus=THREE_D))

    if rep.sector_dim == 0:
        records += reconstruct_T_check(rep, F, tolerance)

    return records


def reconstruct_T_check(rep: Representation,
                        F: FOperator,
                        tolerance: float = DEFAULT_TOLERANCE,
                        ) -> t.List[CheckRecord]:
    q = rep.q
    lam = q - 1 / q
    T_rec = (rep.generators['b'] @ commutator_d(rep, F, normal_form(['d', 'b-'], localized=True))) * (1j / lam)
    T_rec_ = (rep.generators['c'] @ commutator_d(rep, F, normal_form(['a', 'c-'], localized=True))) * (-1j / lam)

    return [
        _numeric(rep, F, 'reconstruct_T', T_rec - rep.lift(F.T), tolerance,
                 'T = i lambda^-1 pi(b) d(d b^-1)', calculus=THREE_D),
        _numeric(rep, F, 'reconstruct_T', T_rec_ - rep.lift(F.T.adjoint()), tolerance,
                 'T* = -i lambda^-1 pi(c) d(a c^-1)', calculus=THREE_D),
    ]


# == CONSISTENCY ==

def bimodule_check(rep: Representation,
                   F: FOperator,
                   tolerance: float = DEFAULT_TOLERANCE,
                   ) -> t.List[CheckRecord]:
    """
    For every pair of generators g, h the one-form dg * h of the 3D calculus is brought into the left normal
    form sum_j x_j w_j. Its operator image has to agree with d(g) pi(h):

    .. code-block:: text

        d(g) pi(h) = sum_j pi(x_j) i Omega_j
    """
    calc = make_calculus(THREE_D)
    forms = invariant_forms(rep, F)
    records = []
    for g in GENERATORS:
        for h in GENERATORS:
            one_form = push_left(differential(generator(g), calc), generator(h))
            image = LatticeOperator.zero(rep.dim)
            for form, coefficient in one_form.components.items():
                image = image + (represent(rep, coefficient) @ forms[form]) * 1j

            lhs = commutator_d(rep, F, generator(g)) @ rep.generators[h]
            records.append(_numeric(rep, F, 'bimodule', lhs - image, tolerance, f'd{g} * {h}', calculus=THREE_D))

    return records


def star_rep_check(rep: Representation,
                   F: FOperator,
                   seed: int = 0,
                   num_samples: int = 100,
                   max_degree: int = 3,
                   tolerance: float = DEFAULT_TOLERANCE,
                   ) -> CheckRecord:
    """
    Checks pi(x*) = pi(x)* on sampled monomials and reports the largest residual.
    """
    rng = random.Random(seed)
    monomials = pbw_monomials(max_degree)
    worst, worst_radius, witness = 0.0, (0, 0, 0), None
    for _ in range(num_samples):
        x = AlgebraElement.monomial(rng.choice(monomials))
        difference = represent(rep, star(x)) - represent(rep, x).adjoint()
        residual = rep.residual(difference)
        if residual >= worst:
            worst, worst_radius, witness = residual, difference.radius, render_element(x)

    return numeric_record(
        check='star_representation',
        residual=worst,
        tolerance=tolerance,
        witness=f'{num_samples} samples, worst {witness}',
        variant=F.spec.label if F.spec else None,
        mask_radius=worst_radius,
        window=rep.window.to_dict(),
    )


def level_law_check(rep: Representation,
                    F: FOperator,
                    num_levels: int = 4,
                    tolerance: float = DEFAULT_TOLERANCE,
                    ) -> t.List[CheckRecord]:
    """
    The diagonal block of F on the level n is w^n R w*^n. Checks that it equals mu^n R' + R''.
    """
    _, mu = F.spec.parameters(rep.q)
    R = F.R
    conjugated = R
    records = []
    for n in range(min(num_levels, rep.window.n_max)):
        difference = conjugated - (F.R_prime * mu ** n + F.R_double_prime)
        records.append(numeric_record(
            check='level_law',
            residual=rep.level_residual(difference),
            tolerance=tolerance,
            witness=f"w^{n} R w*^{n} = mu^{n} R' + R''",
            variant=F.spec.label,
            mask_radius=difference.radius,
            window=rep.level_window.to_dict(),
        ))
        conjugated = rep.w @ conjugated @ rep.w.adjoint()

    return records


def consistency_check(rep: Representation,
                      F: FOperator,
                      seed: int = 0,
                      num_samples: int = 100,
                      tolerance: float = DEFAULT_TOLERANCE,
                      logger: logging.Logger = NULL_LOGGER,
                      ) -> t.List[CheckRecord]:
    """
    Runs the structural checks of an operator representation: F is symmetric, pi is a *-representation and
    F has the level structure of its FSpec. For the variants which are commutator representations of the 3D
    calculus (resp. of its quotients for REMARK_4) also the bimodule images resp. the vanishing of
    Omega(a + eps q d) are checked.
    """
    logger.info('checking the symmetry of F and the *-representation')
    records = [
        _numeric(rep, F, 'f_symmetry', F - F.adjoint(), tolerance, 'F = F*'),
        star_rep_check(rep, F, seed=seed, num_samples=num_samples, tolerance=tolerance),
    ]
    records += level_law_check(rep, F, tolerance=tolerance)

    if F.spec.variant == THEOREM_1:
        logger.info('checking the bimodule relations of the 3D calculus')
        records += bimodule_check(rep, F, tolerance)

    if F.spec.variant == REMARK_4:
        eps = F.spec.epsilon
        element = generator('a') + generator('d').scale(epsilon_scalar(eps) * Q)
        records.append(_numeric(rep, F, 'omega_vanishing', omega(rep, F, element), tolerance,
                                render_element(element), detail='the fourth invariant form collapses'))

    return records


def omega_linearity(rep: Representation,
                    F1: LatticeOperator,
                    F2: LatticeOperator,
                    x: AlgebraElement,
                    ) -> float:
    """
    Returns the largest absolute entry of Omega_{F1 + F2}(x) - Omega_{F1}(x) - Omega_{F2}(x).
    """
    difference = omega(rep, F1 + F2, x) - omega(rep, F1, x) - omega(rep, F2, x)
    return float(np.max(np.abs(difference.matrix.data), initial=0.0))

