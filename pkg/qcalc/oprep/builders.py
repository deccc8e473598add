"""
Construction of the *-representations of O(SU_q(2)) on the truncated lattice and of the operators F
which turn them into commutator representations ``d(x) = i[F, pi(x)]``.

The representations are given by two unitaries. The unitary w acts on the single level space H_0 and
v acts on an optional finite dimensional sector, on which b and c vanish:

.. code-block:: text

    pi(a) e_n = lambda_n e_{n-1}
    pi(d) e_n = lambda_{n+1} e_{n+1}
    pi(c) e_n = q^n w e_n
    pi(b) = -q pi(c)*

The operator F is tridiagonal in n and assembled from the operators T, R' and R'' on H_0:

.. code-block:: text

    F e_n = theta_n T e_{n-1} + (mu^n R' + R'') e_n + theta_{n+1} T* e_{n+1}

The operators T, R' and R'' are described by :class:`OperatorRecipe` instances, which are only
materialized once the window is known. :func:`build_F` checks the conditions of the chosen variant on
the interior of the window before it assembles anything.
"""
import logging
import dataclasses
import typing as t

import numpy as np
from scipy import sparse

from qcalc.qscalar import evaluate_float, parse_scalar
from qcalc.suq2 import AlgebraElement, Monomial, UNIT
from qcalc.suq2 import LocalizationError
from qcalc.oprep.lattice import LatticeWindow, LatticeOperator, Radius
from qcalc.oprep.lattice import interior_residual, band_radius
from qcalc.oprep.lattice import lowering_matrix, shift_matrix, diagonal_matrix, level_lambdas
from qcalc.util import NULL_LOGGER

THEOREM_1 = 'THEOREM_1'
REMARK_4 = 'REMARK_4'
DISK = 'DISK'
VARIANTS = (THEOREM_1, REMARK_4, DISK)

# The conditions on T, R and Q are checked with this relative tolerance before F is assembled
BUILD_TOLERANCE = 1e-12

RECIPE_NAMES = (
    'shift_qk',
    'copy_shift_qk',
    'identity',
    'parity',
    'diag_geometric',
    'diag_q2k',
    'convolution',
    'zero',
)


class SpecViolationError(ValueError):
    pass


# == OPERATOR RECIPES ==

@dataclasses.dataclass(frozen=True)
class OperatorRecipe:
    """
    A named family of operators on the level space H_0, which is materialized for a concrete window by
    :func:`materialize`.

    :ivar name: One of ``RECIPE_NAMES``
    :ivar coefficient: A complex prefactor of the whole operator
    :ivar ratio: The ratio r of "diag_geometric", the diagonal operator e_k -> r^k e_k. This is a scalar in
        q such as "-1/q" and it is evaluated at the q of the window.
    :ivar sequence: The real sequence alpha_{-r0} .. alpha_{r0} of "convolution", the operator
        e_k -> sum_r alpha_r e_{k-r}. It has to have odd length and its middle entry is alpha_0.
    """
    name: str
    coefficient: complex = 1.0
    ratio: t.Optional[str] = None
    sequence: t.Tuple[float, ...] = ()

    def __post_init__(self):
        if self.name not in RECIPE_NAMES:
            raise ValueError(f'Unknown operator recipe "{self.name}", choose one of {", ".join(RECIPE_NAMES)}')
        if self.name == 'diag_geometric' and self.ratio is None:
            raise ValueError('The recipe "diag_geometric" needs a ratio such as "q^2" or "-1/q"')
        if self.name == 'convolution' and len(self.sequence) % 2 != 1:
            raise ValueError(f'The convolution sequence has to have odd length with alpha_0 in the middle, '
                             f'but it has {len(self.sequence)} entries')

    def render(self) -> str:
        parts = [self.name]
        if self.ratio is not None:
            parts.append(f'ratio={self.ratio}')
        if self.sequence:
            parts.append(f'sequence={list(self.sequence)}')
        if self.coefficient != 1.0:
            parts.append(f'coefficient={self.coefficient}')
        return ' '.join(parts)


def shift_qk(coefficient: complex = 1.0) -> OperatorRecipe:
    """T e_k = q^k e_{k-1}, the T of the standard example"""
    return OperatorRecipe('shift_qk', coefficient=coefficient)


def copy_shift_qk(coefficient: complex = 1.0) -> OperatorRecipe:
    """T e_{kl} = q^k e_{k-1,l-1}, which also lowers the copy index of the regular representation"""
    return OperatorRecipe('copy_shift_qk', coefficient=coefficient)


def identity(coefficient: complex = 1.0) -> OperatorRecipe:
    return OperatorRecipe('identity', coefficient=coefficient)


def parity(coefficient: complex = 1.0) -> OperatorRecipe:
    """T e_k = (-1)^k e_k"""
    return OperatorRecipe('parity', coefficient=coefficient)


def diag_geometric(ratio: str, coefficient: complex = 1.0) -> OperatorRecipe:
    return OperatorRecipe('diag_geometric', coefficient=coefficient, ratio=ratio)


def diag_q2k(coefficient: complex = 1.0) -> OperatorRecipe:
    """R e_k = q^(2k) e_k, the R' of the standard example"""
    return OperatorRecipe('diag_q2k', coefficient=coefficient)


def convolution(sequence: t.Sequence[float], coefficient: complex = 1.0) -> OperatorRecipe:
    return OperatorRecipe('convolution', coefficient=coefficient, sequence=tuple(float(v) for v in sequence))


def zero() -> OperatorRecipe:
    return OperatorRecipe('zero')


def _geometric_diagonal(ratio: float, window: LatticeWindow) -> sparse.csc_matrix:
    return diagonal_matrix(np.power(float(ratio), window.k_values()))


def materialize(recipe: OperatorRecipe, window: LatticeWindow) -> LatticeOperator:
    """
    Returns the operator of the recipe on the level space H_0 = span{e_kl} of the given window.
    """
    q = window.q
    num_k, num_copies = window.num_k, window.num_copies
    copies = sparse.identity(num_copies, dtype=np.complex128, format='csc')
    shift = shift_matrix(num_k)

    if recipe.name == 'shift_qk':
        matrix = sparse.kron(shift @ _geometric_diagonal(q, window), copies)
        radius = (0, 1, 0)
    elif recipe.name == 'copy_shift_qk':
        matrix = sparse.kron(shift @ _geometric_diagonal(q, window), shift_matrix(num_copies))
        radius = (0, 1, 1)
    elif recipe.name == 'identity':
        matrix = sparse.identity(num_k * num_copies, dtype=np.complex128)
        radius = (0, 0, 0)
    elif recipe.name == 'parity':
        matrix = sparse.kron(_geometric_diagonal(-1.0, window), copies)
        radius = (0, 0, 0)
    elif recipe.name == 'diag_geometric':
        ratio = evaluate_float(parse_scalar(recipe.ratio), window.q_value)
        matrix = sparse.kron(_geometric_diagonal(ratio, window), copies)
        radius = (0, 0, 0)
    elif recipe.name == 'diag_q2k':
        matrix = sparse.kron(_geometric_diagonal(q ** 2, window), copies)
        radius = (0, 0, 0)
    elif recipe.name == 'convolution':
        r0 = len(recipe.sequence) // 2
        band = sparse.csc_matrix((num_k, num_k), dtype=np.complex128)
        for r, alpha in zip(range(-r0, r0 + 1), recipe.sequence):
            # e_k -> e_{k-r} is the r-th power of the shift for r > 0 and of its adjoint for r < 0
            band = band + alpha * sparse.eye(num_k, k=r, dtype=np.complex128)
        matrix = sparse.kron(band, copies)
        radius = (0, r0, 0)
    else:
        matrix = sparse.csc_matrix((num_k * num_copies, num_k * num_copies), dtype=np.complex128)
        radius = (0, 0, 0)

    return LatticeOperator.from_matrix(matrix, radius) * recipe.coefficient


# == REPRESENTATIONS ==

@dataclasses.dataclass(frozen=True, eq=False)
class FSpec:
    """
    The description of an operator F.

    :ivar T: The recipe of T
    :ivar R_prime: The recipe of R', the part of R with w R' w* = mu R'
    :ivar R_double_prime: The recipe of R'', which commutes with w
    :ivar Q: The hermitian matrix by which F acts on the finite sector, if there is one
    :ivar variant: One of ``VARIANTS``
    :ivar epsilon: The sign of the REMARK_4 variant
    """
    T: OperatorRecipe
    R_prime: OperatorRecipe = dataclasses.field(default_factory=zero)
    R_double_prime: OperatorRecipe = dataclasses.field(default_factory=zero)
    Q: t.Optional[np.ndarray] = None
    variant: str = THEOREM_1
    epsilon: int = 1

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f'Unknown variant "{self.variant}", choose one of {", ".join(VARIANTS)}')
        if self.epsilon not in (1, -1):
            raise ValueError(f'epsilon has to be +1 or -1, not {self.epsilon}')

    @property
    def label(self) -> str:
        if self.variant == REMARK_4:
            return f'{REMARK_4}({self.epsilon:+d})'
        return self.variant

    def parameters(self, q: float) -> t.Tuple[float, float]:
        """
        Returns (theta, mu): T has to satisfy w T w* = theta T and R' has to satisfy w R' w* = mu R'.
        """
        if self.variant == REMARK_4:
            return float(self.epsilon), self.epsilon / q
        return q, q ** 2

    def level_coefficients(self, window: LatticeWindow) -> np.ndarray:
        """
        Returns the coefficients theta_n of the T part of F for n = 0 .. n_max - 1.
        """
        lambdas = level_lambdas(window)
        if self.variant == REMARK_4:
            return np.power(self.epsilon * window.q, 1 - window.n_values()) * lambdas
        return lambdas


def standard_spec(r_double_prime: t.Optional[OperatorRecipe] = None) -> FSpec:
    """
    The standard example: T e_k = q^k e_{k-1} and R' = diag(q^(2k)), optionally with a w-commuting R''.
    """
    return FSpec(T=shift_qk(), R_prime=diag_q2k(), R_double_prime=r_double_prime or zero())


def remark4_spec(epsilon: int) -> FSpec:
    """
    The family which satisfies w T w* = eps T and w R w* = eps q^-1 R for the given sign: T = diag(eps^k)
    and R = diag((eps q)^-k).
    """
    return FSpec(
        T=identity() if epsilon == 1 else parity(),
        R_prime=diag_geometric('1/q' if epsilon == 1 else '-1/q'),
        variant=REMARK_4,
        epsilon=epsilon,
    )


def disk_spec(T: t.Optional[OperatorRecipe] = None) -> FSpec:
    return FSpec(T=T or shift_qk(), variant=DISK)


@dataclasses.dataclass(frozen=True, eq=False)
class RepConfig:
    """
    :ivar window: The truncation window
    :ivar w: A unitary matrix on the k range which replaces the bilateral shift e_k -> e_{k-1}
    :ivar v: A unitary matrix which defines the finite sector
    :ivar f_spec: The description of F
    """
    window: LatticeWindow
    w: t.Optional[np.ndarray] = None
    v: t.Optional[np.ndarray] = None
    f_spec: t.Optional[FSpec] = None


@dataclasses.dataclass(frozen=True, eq=False)
class Representation:
    """
    A materialized representation. The basis of the total space consists of the ``sector_dim`` basis
    vectors of the finite sector followed by the lattice basis vectors in the index order of the window.

    :ivar window: The truncation window
    :ivar w: The unitary w on the level space H_0
    :ivar generators: The operators of the letters "a", "b", "c", "d" and, without a finite sector, of the
        inverses "b-" and "c-"
    :ivar v: The unitary of the finite sector or None
    """
    window: LatticeWindow
    w: LatticeOperator
    generators: t.Dict[str, LatticeOperator]
    v: t.Optional[np.ndarray] = None
    _cache: dict = dataclasses.field(init=False, default_factory=dict, repr=False)

    @property
    def q(self) -> float:
        return self.window.q

    @property
    def sector_dim(self) -> int:
        return 0 if self.v is None else self.v.shape[0]

    @property
    def dim(self) -> int:
        return self.sector_dim + self.window.dim

    @property
    def level_window(self) -> LatticeWindow:
        return self.window.level_window()

    def lift(self,
             operator: LatticeOperator,
             levels: t.Optional[sparse.spmatrix] = None,
             level_radius: int = 0,
             sector: t.Optional[np.ndarray] = None,
             ) -> LatticeOperator:
        """
        Returns the operator ``levels (x) operator`` on the whole lattice, where ``operator`` acts on the
        level space H_0 and ``levels`` on the level index n. It acts as ``sector`` on the finite sector.
        """
        if levels is None:
            levels = sparse.identity(self.window.n_max, dtype=np.complex128, format='csc')

        matrix = sparse.kron(levels, operator.matrix)
        scale = sparse.kron(abs(levels), operator.scale)
        if self.sector_dim:
            if sector is None:
                sector = np.zeros((self.sector_dim, self.sector_dim))
            matrix = sparse.block_diag([sparse.csc_matrix(sector, dtype=np.complex128), matrix])
            scale = sparse.block_diag([sparse.csc_matrix(np.abs(sector)), scale])

        return LatticeOperator(
            matrix=sparse.csc_matrix(matrix, dtype=np.complex128),
            scale=sparse.csc_matrix(scale),
            radius=(level_radius, operator.radius[1], operator.radius[2]),
        )

    def identity(self) -> LatticeOperator:
        return LatticeOperator.identity(self.dim)

    def residual(self, operator: LatticeOperator, radius: t.Optional[Radius] = None) -> float:
        """
        Returns the relative interior residual of an operator on the whole space.
        """
        return interior_residual(operator, self.window, self.sector_dim, radius)

    def level_residual(self, operator: LatticeOperator, radius: t.Optional[Radius] = None) -> float:
        """
        Returns the relative interior residual of an operator on the level space H_0.
        """
        return interior_residual(operator, self.level_window, 0, radius)

    def monomial_operator(self, monomial: Monomial) -> LatticeOperator:
        if monomial not in self._cache:
            result = self.identity()
            for letter in monomial.letters():
                if letter not in self.generators:
                    raise LocalizationError(f'The inverse letter "{letter}" is not represented, because the '
                                            f'representation has a finite sector on which b and c vanish')
                result = result @ self.generators[letter]
            self._cache[monomial] = result

        return self._cache[monomial]


def _check_unitary(matrix: np.ndarray, name: str, tolerance: float) -> None:
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SpecViolationError(f'The unitary {name} has to be a square matrix, not of shape {matrix.shape}')
    deviation = np.max(np.abs(matrix @ matrix.conj().T - np.identity(matrix.shape[0])))
    if deviation > tolerance:
        raise SpecViolationError(f'The matrix {name} is not unitary, |{name} {name}* - 1| = {deviation:.2e}')


def build_rep(config: RepConfig, logger: logging.Logger = NULL_LOGGER) -> Representation:
    """
    Materializes the generators of the representation which is defined by the unitaries of the config.

    :raises SpecViolationError: If v is not unitary or a custom w fails to be unitary on the interior
    """
    window = config.window
    q = window.q
    n = window.n_values()
    copies = sparse.identity(window.num_copies, dtype=np.complex128, format='csc')

    if config.w is None:
        w = LatticeOperator.from_matrix(sparse.kron(shift_matrix(window.num_k), copies), (0, 1, 0))
    else:
        w_matrix = np.asarray(config.w, dtype=np.complex128)
        if w_matrix.shape != (window.num_k, window.num_k):
            raise SpecViolationError(f'The unitary w has to act on the {window.num_k} values of k, but it has '
                                     f'the shape {w_matrix.shape}')
        w = LatticeOperator.from_matrix(sparse.kron(sparse.csc_matrix(w_matrix), copies),
                                        (0, band_radius(w_matrix), 0))
        identity_h0 = LatticeOperator.identity(window.level_dim)
        deviation = interior_residual(w @ w.adjoint() - identity_h0, window.level_window())
        if deviation > BUILD_TOLERANCE:
            raise SpecViolationError(f'The matrix w is not unitary on the interior, residual {deviation:.2e}')

    if config.v is not None:
        _check_unitary(config.v, 'v', BUILD_TOLERANCE)
    v = None if config.v is None else np.asarray(config.v, dtype=np.complex128)

    logger.info(f'building the representation on the window {window.to_dict()}')
    lowering = lowering_matrix(level_lambdas(window))
    q_levels = diagonal_matrix(np.power(q, n))
    q_levels_inverse = diagonal_matrix(np.power(1 / q, n))
    identity_h0 = LatticeOperator.identity(window.level_dim)

    rep = Representation(window=window, w=w, generators={}, v=v)
    generators = {
        'a': rep.lift(identity_h0, lowering, 1, sector=v),
        'd': rep.lift(identity_h0, sparse.csc_matrix(lowering.T), 1, sector=None if v is None else v.conj().T),
        'c': rep.lift(w, q_levels),
        'b': rep.lift(w.adjoint(), q_levels) * (-q),
    }
    if v is None:
        generators['c-'] = rep.lift(w.adjoint(), q_levels_inverse)
        generators['b-'] = rep.lift(w, q_levels_inverse) * (-1 / q)

    rep.generators.update(generators)
    return rep


def represent(rep: Representation, x: AlgebraElement) -> LatticeOperator:
    """
    Returns the operator pi(x). The coefficients of x are evaluated at the q of the window.

    :raises LocalizationError: If x contains inverses of b or c and the representation has a finite sector
    """
    if x.localized and rep.sector_dim:
        raise LocalizationError(f'The element {x} contains inverses of b or c, which do not exist on the '
                                f'finite sector of the representation')

    result = LatticeOperator.zero(rep.dim)
    for monomial, coefficient in x.items():
        value = evaluate_float(coefficient, rep.window.q_value)
        if monomial == UNIT:
            result = result + rep.identity() * value
        else:
            result = result + rep.monomial_operator(monomial) * value

    return result


# == THE OPERATOR F ==

@dataclasses.dataclass(frozen=True, eq=False)
class FOperator(LatticeOperator):
    """
    The assembled operator F on the whole space, which also keeps its building blocks on the level space.
    """
    T: t.Optional[LatticeOperator] = None
    R_prime: t.Optional[LatticeOperator] = None
    R_double_prime: t.Optional[LatticeOperator] = None
    spec: t.Optional[FSpec] = None

    @property
    def R(self) -> LatticeOperator:
        return self.R_prime + self.R_double_prime


def check_f_spec(rep: Representation,
                 spec: FSpec,
                 blocks: t.Optional[t.Tuple[LatticeOperator, LatticeOperator, LatticeOperator]] = None,
                 ) -> t.List[t.Tuple[str, float]]:
    """
    Evaluates the conditions of the variant of the FSpec and returns the list of (condition, residual)
    pairs. The residuals of the level space conditions are relative interior residuals.
    """
    theta, mu = spec.parameters(rep.q)
    T, R_prime, R_double_prime = blocks or tuple(materialize(recipe, rep.window) for recipe in
                                                 (spec.T, spec.R_prime, spec.R_double_prime))
    w = rep.w
    w_ = w.adjoint()
    R = R_prime + R_double_prime
    wRw = w @ R @ w_

    conditions = [
        ('w T w* = theta T', rep.level_residual(w @ T @ w_ - T * theta)),
        ("w R' w* = mu R'", rep.level_residual(w @ R_prime @ w_ - R_prime * mu)),
        ("w R'' = R'' w", rep.level_residual(w @ R_double_prime - R_double_prime @ w)),
        ('w^2 R w*^2 + mu R = (1 + mu) w R w*', rep.level_residual(w @ wRw @ w_ + R * mu - wRw * (1 + mu))),
        ('R = R*', rep.level_residual(R - R.adjoint())),
    ]

    if spec.variant == DISK:
        conditions.append(('R = 0', float(np.max(np.abs(R.matrix.data), initial=0.0))))

    if rep.v is not None:
        v = rep.v
        v_ = v.conj().T
        Q = np.zeros_like(v) if spec.Q is None else np.asarray(spec.Q, dtype=np.complex128)
        scale = max(1.0, float(np.max(np.abs(Q), initial=0.0)))
        vQv = v @ Q @ v_
        conditions += [
            ('v^2 Q v*^2 + mu Q = (1 + mu) v Q v*',
             float(np.max(np.abs(v @ vQv @ v_ + mu * Q - (1 + mu) * vQv), initial=0.0)) / scale),
            ('Q = Q*', float(np.max(np.abs(Q - Q.conj().T), initial=0.0)) / scale),
        ]

    return conditions


def build_F(rep: Representation,
            spec: FSpec,
            tolerance: float = BUILD_TOLERANCE,
            validate: bool = True,
            logger: logging.Logger = NULL_LOGGER,
            ) -> FOperator:
    """
    Assembles the operator F of the FSpec on the representation.

    :param rep: The representation
    :param spec: The description of F
    :param tolerance: The tolerance for the conditions of the variant
    :param validate: If False the conditions are not checked. This is only meant for control experiments
        with operators that deliberately violate them.
    :raises SpecViolationError: If one of the conditions of the variant is violated
    """
    window = rep.window
    blocks = tuple(materialize(recipe, window) for recipe in (spec.T, spec.R_prime, spec.R_double_prime))
    T, R_prime, R_double_prime = blocks

    if validate:
        logger.info(f'checking the conditions of the variant {spec.label}')
        for condition, residual in check_f_spec(rep, spec, blocks):
            if not residual < tolerance:
                raise SpecViolationError(f'The operator F of the variant {spec.label} violates the condition '
                                         f'"{condition}" with the residual {residual:.2e} (tolerance '
                                         f'{tolerance:.0e}). T = {spec.T.render()}, R\' = '
                                         f'{spec.R_prime.render()}, R\'\' = {spec.R_double_prime.render()}')

    logger.info(f'building F of the variant {spec.label}')
    _, mu = spec.parameters(rep.q)
    lowering = lowering_matrix(spec.level_coefficients(window))
    Q = None
    if rep.v is not None:
        Q = np.zeros_like(rep.v) if spec.Q is None else np.asarray(spec.Q, dtype=np.complex128)

    F = (
        rep.lift(T, lowering, 1, sector=Q)
        + rep.lift(T.adjoint(), sparse.csc_matrix(lowering.T), 1)
        + rep.lift(R_prime, diagonal_matrix(np.power(mu, window.n_values())))
        + rep.lift(R_double_prime)
    )
    return FOperator(
        matrix=F.matrix,
        scale=F.scale,
        radius=F.radius,
        T=T,
        R_prime=R_prime,
        R_double_prime=R_double_prime,
        spec=spec,
    )


def build(config: RepConfig, logger: logging.Logger = NULL_LOGGER) -> t.Tuple[Representation, FOperator]:
    """
    Builds the representation of the config together with the F of its spec, which defaults to the
    standard example.
    """
    rep = build_rep(config, logger=logger)
    return rep, build_F(rep, config.f_spec or standard_spec(), logger=logger)


# == THE SPLIT OF R ==

@dataclasses.dataclass(frozen=True)
class RDecomposition:
    """
    The split R = R' + R'' into the eigen components w R' w* = q^2 R' and w R'' w* = R''.

    :ivar printed_residual: The residual of w R'' w* = R'' for the split with the factors 1 / (1 + q^2)
    """
    R_prime: LatticeOperator
    R_double_prime: LatticeOperator
    q: float
    printed_residual: float

    def level(self, n: int) -> LatticeOperator:
        """
        Returns the diagonal block R_n = w^n R w*^n = q^(2n) R' + R'' of F on the level n.
        """
        return self.R_prime * self.q ** (2 * n) + self.R_double_prime


def decompose_R(R: LatticeOperator,
                w: LatticeOperator,
                window: LatticeWindow,
                tolerance: float = BUILD_TOLERANCE,
                logger: logging.Logger = NULL_LOGGER,
                ) -> RDecomposition:
    """
    Splits an operator R on the level space, which satisfies w^2 R w*^2 + q^2 R = (1 + q^2) w R w*, into
    the parts

    .. code-block:: text

        R'  = (w R w* - R) / (q^2 - 1)
        R'' = (q^2 R - w R w*) / (q^2 - 1)

    and verifies both eigen properties on the interior.

    :raises SpecViolationError: If R does not satisfy the recurrence or a part fails its eigen property
    """
    level_window = window.level_window()
    q = window.q
    w_ = w.adjoint()
    wRw = w @ R @ w_

    residual = interior_residual(w @ wRw @ w_ + R * q ** 2 - wRw * (1 + q ** 2), level_window)
    if not residual < tolerance:
        raise SpecViolationError(f'R does not satisfy w^2 R w*^2 + q^2 R = (1 + q^2) w R w*, the residual is '
                                 f'{residual:.2e}')

    R_prime = (wRw - R) / (q ** 2 - 1)
    R_double_prime = (R * q ** 2 - wRw) / (q ** 2 - 1)
    for name, residual in [
        ("w R' w* = q^2 R'", interior_residual(w @ R_prime @ w_ - R_prime * q ** 2, level_window)),
        ("w R'' w* = R''", interior_residual(w @ R_double_prime @ w_ - R_double_prime, level_window)),
    ]:
        if not residual < tolerance:
            raise SpecViolationError(f'The split of R violates "{name}" with the residual {residual:.2e}')

    printed = (R * q ** 2 + wRw) / (1 + q ** 2)
    printed_residual = interior_residual(w @ printed @ w_ - printed, level_window)
    if printed_residual >= tolerance:
        logger.warning(f'the split with the factors 1/(1+q^2) gives an R\'\' which does not commute with w, '
                       f'residual {printed_residual:.2e}')

    return RDecomposition(
        R_prime=R_prime,
        R_double_prime=R_double_prime,
        q=q,
        printed_residual=printed_residual,
    )
