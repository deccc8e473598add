"""
Truncated lattice Hilbert spaces and sparse operators on them.

The infinite dimensional Hilbert spaces of the representations have the orthonormal bases e_{nk} (resp.
e_{nkl} for the regular representation) with n, l >= 0 and k an arbitrary integer. They are truncated to
the window ``0 <= n < n_max``, ``k_min <= k <= k_max`` and ``0 <= l < l_max``. An operator is then simply a
sparse matrix, which annihilates everything that would be mapped outside the window.

Because of that truncation, operator identities only hold on the *interior* of the window: on the basis
vectors which are far enough from the truncation boundaries that no operator in the identity ever leaves
the window. Every :class:`LatticeOperator` therefore tracks its support radius, i.e. the maximal distance
in (n, k, l) by which it moves a basis vector, and :func:`interior_mask` selects the safe basis vectors
for a given radius. The lower boundaries n = 0 and l = 0 are genuine boundaries of the lattice and not
truncation boundaries, so only the k range is shrunk from both sides.
"""
import dataclasses
import typing as t

import numpy as np
import sympy as sp
from scipy import sparse

import qcalc.typing as tc
from qcalc.qscalar import check_q_value

Radius = t.Tuple[int, int, int]


class WindowError(ValueError):
    pass


class WindowTooSmallError(WindowError):
    pass


@dataclasses.dataclass(frozen=True)
class LatticeWindow:
    """
    The truncation window of the lattice.

    :ivar n_max: The number of levels n = 0 .. n_max - 1
    :ivar k_min: The smallest k, has to be negative
    :ivar k_max: The largest k, has to be positive
    :ivar l_max: The number of copies l = 0 .. l_max - 1 of the regular representation. 0 means that
        there is no copy index at all.
    :ivar q_value: The exact value of q in (0, 1), e.g. "1/2"
    """
    n_max: int
    k_min: int
    k_max: int
    l_max: int = 0
    q_value: t.Union[str, sp.Rational] = '1/2'

    def __post_init__(self):
        if self.n_max < 1:
            raise WindowError(f'The window needs at least one level, but n_max = {self.n_max}')
        if not (self.k_min < 0 < self.k_max):
            raise WindowError(f'The k range has to contain negative and positive values, but it is '
                              f'[{self.k_min}, {self.k_max}]')
        if self.l_max < 0:
            raise WindowError(f'The number of copies l_max = {self.l_max} cannot be negative')

        # This raises a QRangeError for invalid values
        object.__setattr__(self, 'q_value', check_q_value(self.q_value))

    @property
    def q(self) -> float:
        return float(self.q_value)

    @property
    def num_k(self) -> int:
        return self.k_max - self.k_min + 1

    @property
    def num_copies(self) -> int:
        return max(1, self.l_max)

    @property
    def level_dim(self) -> int:
        """The dimension of a single level, i.e. of the space H_0 spanned by the e_{kl}"""
        return self.num_k * self.num_copies

    @property
    def dim(self) -> int:
        return self.n_max * self.level_dim

    def k_values(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1)

    def n_values(self) -> np.ndarray:
        return np.arange(self.n_max)

    def index(self, n: int, k: int, l: int = 0) -> int:
        return (n * self.num_k + (k - self.k_min)) * self.num_copies + l

    def grid(self) -> t.Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Returns the arrays (n, k, l) of the lattice coordinates of all basis vectors in index order.
        """
        n, k, l = np.meshgrid(
            self.n_values(),
            self.k_values(),
            np.arange(self.num_copies),
            indexing='ij',
        )
        return n.ravel(), k.ravel(), l.ravel()

    def level_window(self) -> 'LatticeWindow':
        """
        Returns the window of the single level space H_0, on which T, R and w act.
        """
        return dataclasses.replace(self, n_max=1)

    def to_dict(self) -> tc.WindowDict:
        return {
            'n_max': self.n_max,
            'k_min': self.k_min,
            'k_max': self.k_max,
            'l_max': self.l_max,
            'q': str(self.q_value),
        }


def interior_mask(window: LatticeWindow, radius: Radius, sector_dim: int = 0) -> np.ndarray:
    """
    Returns the boolean mask of the basis vectors whose distance to every truncation boundary is at least
    the given radius. The first ``sector_dim`` entries belong to a finite dimensional sector, which is never
    truncated and therefore always included.

    :raises WindowTooSmallError: If no lattice basis vector is left
    """
    rn, rk, rl = radius
    n, k, l = window.grid()
    inside = (
        (n <= window.n_max - 1 - rn)
        & (k >= window.k_min + rk)
        & (k <= window.k_max - rk)
        & (l <= window.num_copies - 1 - rl)
    )
    if not inside.any():
        raise WindowTooSmallError(f'The interior of the window {window.to_dict()} for the support radius '
                                  f'{tuple(radius)} is empty. Increase n_max to more than {rn + 1}, the k '
                                  f'range to more than {2 * rk + 1} values or l_max to more than {rl + 1}.')

    return np.concatenate([np.ones(sector_dim, dtype=bool), inside])


def column_norms(matrix: sparse.spmatrix) -> np.ndarray:
    return np.sqrt(np.asarray(abs(matrix).power(2).sum(axis=0)).ravel())


def band_radius(matrix: sparse.spmatrix) -> int:
    """
    Returns the largest distance |i - j| of a nonzero entry of the given matrix.
    """
    coo = sparse.coo_matrix(matrix)
    if coo.nnz == 0:
        return 0
    return int(np.max(np.abs(coo.row - coo.col)))


@dataclasses.dataclass(frozen=True, eq=False)
class LatticeOperator:
    """
    A sparse operator on a truncated lattice, together with its entry-wise magnitude bound ``scale`` and
    its support radius.

    The scale is the operator that results from applying all sums and products to the absolute values of
    the factors. Residuals of identities are measured relative to it, so that pure float round-off stays
    small even where the entries grow like q^-|k|.

    ``@`` is the operator product, ``*`` with a number scales the operator:

    .. code-block:: python

        commutator = 1j * (F @ x - x @ F)
    """
    matrix: sparse.csc_matrix
    scale: sparse.csc_matrix
    radius: Radius = (0, 0, 0)

    @classmethod
    def from_matrix(cls, matrix: sparse.spmatrix, radius: Radius = (0, 0, 0)) -> 'LatticeOperator':
        matrix = sparse.csc_matrix(matrix, dtype=np.complex128)
        return cls(matrix=matrix, scale=sparse.csc_matrix(abs(matrix)), radius=tuple(radius))

    @classmethod
    def identity(cls, dim: int) -> 'LatticeOperator':
        return cls.from_matrix(sparse.identity(dim, dtype=np.complex128, format='csc'))

    @classmethod
    def zero(cls, dim: int) -> 'LatticeOperator':
        return cls.from_matrix(sparse.csc_matrix((dim, dim), dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def adjoint(self) -> 'LatticeOperator':
        return LatticeOperator(
            matrix=sparse.csc_matrix(self.matrix.conj().T),
            scale=sparse.csc_matrix(self.scale.T),
            radius=self.radius,
        )

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def __add__(self, other: 'LatticeOperator') -> 'LatticeOperator':
        if not isinstance(other, LatticeOperator):
            return NotImplemented
        return LatticeOperator(
            matrix=sparse.csc_matrix(self.matrix + other.matrix),
            scale=sparse.csc_matrix(self.scale + other.scale),
            radius=tuple(max(a, b) for a, b in zip(self.radius, other.radius)),
        )

    def __neg__(self) -> 'LatticeOperator':
        return LatticeOperator(matrix=-self.matrix, scale=self.scale, radius=self.radius)

    def __sub__(self, other: 'LatticeOperator') -> 'LatticeOperator':
        if not isinstance(other, LatticeOperator):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other: 'LatticeOperator') -> 'LatticeOperator':
        if not isinstance(other, LatticeOperator):
            return NotImplemented
        return LatticeOperator(
            matrix=sparse.csc_matrix(self.matrix @ other.matrix),
            scale=sparse.csc_matrix(self.scale @ other.scale),
            radius=tuple(a + b for a, b in zip(self.radius, other.radius)),
        )

    def __mul__(self, value: complex) -> 'LatticeOperator':
        if isinstance(value, LatticeOperator):
            raise TypeError('Use the "@" operator for the product of two lattice operators')
        return LatticeOperator(
            matrix=sparse.csc_matrix(self.matrix * value),
            scale=sparse.csc_matrix(self.scale * abs(value)),
            radius=self.radius,
        )

    def __rmul__(self, value: complex) -> 'LatticeOperator':
        return self.__mul__(value)

    def __truediv__(self, value: complex) -> 'LatticeOperator':
        return self.__mul__(1 / value)


def interior_residual(operator: LatticeOperator,
                      window: LatticeWindow,
                      sector_dim: int = 0,
                      radius: t.Optional[Radius] = None,
                      ) -> float:
    """
    Returns the relative interior residual of an operator which is supposed to vanish:

    .. code-block:: text

        max over interior basis vectors e_s of  |X e_s| / max(1, |scale(X) e_s|)

    :param operator: The operator X
    :param window: The window of the lattice
    :param sector_dim: The dimension of the finite sector in front of the lattice
    :param radius: The mask radius. Defaults to the support radius of the operator.
    :raises WindowTooSmallError: If the interior is empty
    """
    mask = interior_mask(window, radius if radius is not None else operator.radius, sector_dim)
    columns = np.flatnonzero(mask)
    norms = column_norms(operator.matrix[:, columns])
    scales = column_norms(operator.scale[:, columns])
    if len(norms) == 0:
        return 0.0

    return float(np.max(norms / np.maximum(1.0, scales)))


def restrict_columns(operator: LatticeOperator,
                     window: LatticeWindow,
                     radius: Radius,
                     sector_dim: int = 0,
                     ) -> sparse.csc_matrix:
    """
    Returns the matrix of the operator restricted to the interior columns for the given radius.
    """
    columns = np.flatnonzero(interior_mask(window, radius, sector_dim))
    return sparse.csc_matrix(operator.matrix[:, columns])


# == ELEMENTARY MATRICES ==

def lowering_matrix(coefficients: np.ndarray) -> sparse.csc_matrix:
    """
    Returns the matrix A of the level lowering ``A e_n = c_n e_{n-1}`` for the given coefficients
    c_0, c_1, ... of which c_0 is ignored.
    """
    size = len(coefficients)
    if size == 1:
        return sparse.csc_matrix((1, 1), dtype=np.complex128)
    return sparse.diags(coefficients[1:], offsets=1, shape=(size, size), format='csc', dtype=np.complex128)


def shift_matrix(size: int) -> sparse.csc_matrix:
    """
    Returns the truncated shift ``e_i -> e_{i-1}``, whose adjoint is the shift ``e_i -> e_{i+1}``.
    """
    return sparse.eye(size, k=1, format='csc', dtype=np.complex128)


def diagonal_matrix(values: np.ndarray) -> sparse.csc_matrix:
    return sparse.diags(np.asarray(values, dtype=np.complex128), format='csc')


def level_lambdas(window: LatticeWindow) -> np.ndarray:
    """
    Returns the coefficients lambda_n = (1 - q^(2n))^(1/2) for n = 0 .. n_max - 1
    """
    return np.sqrt(1.0 - window.q ** (2 * window.n_values()))
