"""
The commutator representation on the Hilbert space of the Haar state.

The GNS representation of the Haar state is the direct sum over the copy index l of the standard
representation on the e_{nk}. The Haar state itself is the vector state of

.. code-block:: text

    phi_h = sum_n q^n e_{n0n}

(normalized), and the operator F uses a T which also lowers the copy index:

.. code-block:: text

    T e_{nkl} = alpha (1 + q^2)^(1/2) q^k e_{n,k-1,l-1}
    R' e_{nk} = beta q^2 (1 + q^2 + q^4)^(1/2) q^(2k) e_{nk}

The inner product of one-forms ``<w, w'> = <rho(w) phi_h, rho(w') phi_h>`` then makes the invariant forms
orthogonal.
"""
import logging
import dataclasses
import typing as t

import numpy as np

from qcalc.suq2 import AlgebraElement
from qcalc.suq2 import generator, one
from qcalc.report import CheckRecord, MEASURED
from qcalc.report import numeric_record
from qcalc.config import DEFAULT_TOLERANCE
from qcalc.oprep.lattice import LatticeWindow, WindowError
from qcalc.oprep.builders import Representation, FOperator, RepConfig, FSpec
from qcalc.oprep.builders import build_rep, build_F, represent, copy_shift_qk, diag_q2k
from qcalc.oprep.checks import invariant_forms
from qcalc.util import NULL_LOGGER

# The order of the basis forms in the Gram matrix: w0 = w(b), w1 = w(a), w2 = w(c)
GRAM_FORMS = ('w0', 'w1', 'w2')


@dataclasses.dataclass(frozen=True, eq=False)
class RegularRep:
    rep: Representation
    F: FOperator
    haar: np.ndarray
    alpha: float
    beta: float

    def h(self, x: AlgebraElement) -> complex:
        """
        Returns the value <pi(x) phi_h, phi_h> of the Haar state on x.
        """
        return complex(np.vdot(self.haar, represent(self.rep, x).matrix @ self.haar))


def regular_spec(q: float, alpha: float = 1.0, beta: float = 1.0) -> FSpec:
    return FSpec(
        T=copy_shift_qk(alpha * np.sqrt(1 + q ** 2)),
        R_prime=diag_q2k(beta * q ** 2 * np.sqrt(1 + q ** 2 + q ** 4)),
    )


def haar_vector(window: LatticeWindow, sector_dim: int = 0) -> np.ndarray:
    """
    Returns the truncation of the vector sum_n q^n e_{n0n} to the window, normalized to unit norm. The
    neglected tail has the squared norm q^(2 n_max) / (1 - q^2) before normalization.

    :raises WindowError: If the copy index does not reach l = n_max - 1
    """
    if window.l_max < window.n_max:
        raise WindowError(f'The Haar vector lives on the diagonal l = n, which needs l_max >= n_max, but '
                          f'l_max = {window.l_max} and n_max = {window.n_max}')

    vector = np.zeros(sector_dim + window.dim, dtype=np.complex128)
    for n in range(window.n_max):
        vector[sector_dim + window.index(n, 0, n)] = window.q ** n

    return vector / np.linalg.norm(vector)


def regular_rep(q_value: str,
                n_max: int,
                k_min: int,
                k_max: int,
                l_max: int,
                alpha: float = 1.0,
                beta: float = 1.0,
                logger: logging.Logger = NULL_LOGGER,
                ) -> RegularRep:
    window = LatticeWindow(n_max=n_max, k_min=k_min, k_max=k_max, l_max=l_max, q_value=q_value)
    haar = haar_vector(window)
    rep = build_rep(RepConfig(window=window), logger=logger)
    F = build_F(rep, regular_spec(window.q, alpha, beta), logger=logger)
    return RegularRep(rep=rep, F=F, haar=haar, alpha=alpha, beta=beta)


def gram_matrix(reg: RegularRep) -> np.ndarray:
    """
    Returns the 3x3 matrix of the inner products <i Omega_j phi_h, i Omega_k phi_h> of the invariant forms
    in the order w0, w1, w2. The inner product is linear in the first argument.
    """
    forms = invariant_forms(reg.rep, reg.F)
    vectors = [1j * (forms[name].matrix @ reg.haar) for name in GRAM_FORMS]
    gram = np.zeros((3, 3), dtype=np.complex128)
    for j, u in enumerate(vectors):
        for k, v in enumerate(vectors):
            gram[j, k] = np.vdot(v, u)

    return gram


def expected_gram_diagonal(q: float, alpha: float, beta: float) -> np.ndarray:
    """
    Returns the diagonal of the Gram matrix as it results from the normalization of T and R' above:
    <w0, w0> = alpha^2 q^4 (1 - q^2)^2, <w1, w1> = beta^2 (1 - q^2)^2 and <w2, w2> = alpha^2 (1 - q^2)^2.
    """
    factor = (1 - q ** 2) ** 2
    return np.array([alpha ** 2 * q ** 4 * factor, beta ** 2 * factor, alpha ** 2 * factor])


def gram_check(reg: RegularRep, tolerance: float = DEFAULT_TOLERANCE) -> t.List[CheckRecord]:
    """
    Checks the Haar state on the unit and the generators, the orthogonality of the invariant forms and the
    diagonal constants of the Gram matrix.
    """
    window = reg.rep.window.to_dict()
    variant = reg.F.spec.label
    records = [numeric_record('haar_state', abs(np.linalg.norm(reg.haar) - 1.0), tolerance,
                              witness='|phi_h| = 1', variant=variant, window=window)]
    for name, x, expected in [('h(1) = 1', one(), 1.0),
                              ('h(a) = 0', generator('a'), 0.0),
                              ('h(b) = 0', generator('b'), 0.0),
                              ('h(c) = 0', generator('c'), 0.0)]:
        records.append(numeric_record('haar_state', abs(reg.h(x) - expected), tolerance,
                                      witness=name, variant=variant, window=window))

    gram = gram_matrix(reg)
    off_diagonal = np.max(np.abs(gram - np.diag(np.diag(gram))))
    records.append(numeric_record('gram_matrix', off_diagonal, tolerance, witness='<w_j, w_k> = 0 for j != k',
                                  variant=variant, window=window))
    records.append(numeric_record('gram_matrix', np.max(np.abs(gram - gram.conj().T)), tolerance,
                                  witness='Gram matrix is hermitian', variant=variant, window=window))

    q = reg.rep.q
    expected = expected_gram_diagonal(q, reg.alpha, reg.beta)
    computed = np.real(np.diag(gram))
    for name, value, target in zip(GRAM_FORMS, computed, expected):
        records.append(numeric_record(
            'gram_matrix',
            abs(value - target) / max(1.0, abs(target)),
            tolerance,
            witness=f'<{name}, {name}> = {target:.6g}',
            variant=variant,
            window=window,
        ))

    records.append(CheckRecord(
        check='gram_matrix',
        variant=variant,
        witness='diagonal constants',
        status=MEASURED,
        window=window,
        detail=(f'computed diagonal {", ".join(f"{v:.6g}" for v in computed)}; the published values '
                f'alpha^2 = {reg.alpha ** 2:.6g}, beta^2 = {reg.beta ** 2:.6g}, alpha^2 differ by the factors '
                f'q^4 (1-q^2)^2, (1-q^2)^2, (1-q^2)^2; ratio <w0, w0> / <w2, w2> = '
                f'{computed[0] / computed[2]:.6g}'),
    ))
    return records
