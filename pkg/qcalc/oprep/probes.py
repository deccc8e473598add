"""
Numeric evidence for the unboundedness of the operators of nontrivial commutator representations.

On a growing sequence of windows the largest interior column norm of Omega(b) and of d(b) is measured. For
the standard example both grow geometrically when k_min decreases: Omega(b) like q^k_min and d(b), which
also carries the R' term, like q^(2 k_min).
"""
import logging
import dataclasses
import typing as t

import numpy as np

from qcalc.suq2 import generator
from qcalc.report import CheckRecord, MEASURED
from qcalc.config import DEFAULT_N_MAX
from qcalc.oprep.lattice import LatticeWindow, LatticeOperator
from qcalc.oprep.lattice import interior_mask, column_norms
from qcalc.oprep.builders import Representation, FSpec, RepConfig, THEOREM_1
from qcalc.oprep.builders import build_rep, build_F, standard_spec, identity
from qcalc.oprep.checks import omega, commutator_d
from qcalc.util import NULL_LOGGER


def bounded_control_spec() -> FSpec:
    """
    T = identity and R = 0. This violates w T w* = q T, so it can only be built without validation.
    """
    return FSpec(T=identity(), variant=THEOREM_1)


@dataclasses.dataclass(frozen=True)
class GrowthResult:
    """
    :ivar k_mins: The lower k bounds of the windows
    :ivar omega_sups: The largest interior column norm of Omega(b) per window
    :ivar commutator_sups: The largest interior column norm of d(b) per window
    :ivar ratios: The growth factors of Omega(b) per unit decrease of k_min between consecutive windows
    :ivar fitted_ratio: The growth factor of Omega(b) from a log-linear fit, None for fewer than two windows
    :ivar commutator_ratio: The same for d(b)
    """
    k_mins: np.ndarray
    omega_sups: np.ndarray
    commutator_sups: np.ndarray
    ratios: np.ndarray
    fitted_ratio: t.Optional[float] = None
    commutator_ratio: t.Optional[float] = None

    def record(self, q: float, variant: t.Optional[str] = None) -> CheckRecord:
        def render(value): return 'n/a' if value is None else f'{value:.6g}'

        return CheckRecord(
            check='growth_probe',
            variant=variant,
            witness=f'k_min in {self.k_mins.tolist()}',
            status=MEASURED,
            detail=(f'growth ratio of Omega(b): {render(self.fitted_ratio)} (expected q^-1 = {1 / q:.6g}), '
                    f'of d(b): {render(self.commutator_ratio)} (expected q^-2 = {1 / q ** 2:.6g})'),
        )


def _interior_sup(rep: Representation, operator: LatticeOperator) -> float:
    columns = np.flatnonzero(interior_mask(rep.window, operator.radius, rep.sector_dim))
    return float(np.max(column_norms(operator.matrix[:, columns]), initial=0.0))


def _fit_ratio(k_mins: np.ndarray, sups: np.ndarray) -> t.Optional[float]:
    if len(k_mins) < 2 or np.any(sups <= 0):
        return None
    slope, _ = np.polyfit(k_mins, np.log(sups), 1)
    return float(np.exp(-slope))


def growth_probe(q_value: str,
                 k_min_sequence: t.Sequence[int],
                 n_max: int = DEFAULT_N_MAX,
                 k_max: int = 4,
                 spec: t.Optional[FSpec] = None,
                 validate: bool = True,
                 logger: logging.Logger = NULL_LOGGER,
                 ) -> GrowthResult:
    """
    Measures the interior sup norms of Omega(b) and d(b) on the windows with the given lower k bounds.

    :param q_value: The value of q
    :param k_min_sequence: The lower k bounds, usually decreasing
    :param n_max: The number of levels of every window
    :param k_max: The upper k bound of every window
    :param spec: The spec of F, defaults to the standard example
    :param validate: Whether build_F checks the conditions of the FSpec
    """
    spec = spec or standard_spec()
    k_mins = np.array(list(k_min_sequence), dtype=int)
    omega_sups, commutator_sups = [], []
    for k_min in k_mins:
        window = LatticeWindow(n_max=n_max, k_min=int(k_min), k_max=k_max, q_value=q_value)
        rep = build_rep(RepConfig(window=window))
        F = build_F(rep, spec, validate=validate)
        omega_sups.append(_interior_sup(rep, omega(rep, F, generator('b'))))
        commutator_sups.append(_interior_sup(rep, commutator_d(rep, F, generator('b'))))
        logger.info(f'k_min = {k_min}: sup |Omega(b)| = {omega_sups[-1]:.3e}, sup |d(b)| = '
                    f'{commutator_sups[-1]:.3e}')

    omega_sups = np.array(omega_sups, dtype=float)
    commutator_sups = np.array(commutator_sups, dtype=float)
    if len(k_mins) > 1:
        ratios = np.exp(np.diff(np.log(omega_sups)) / -np.diff(k_mins))
    else:
        ratios = np.zeros(0)

    return GrowthResult(
        k_mins=k_mins,
        omega_sups=omega_sups,
        commutator_sups=commutator_sups,
        ratios=ratios,
        fitted_ratio=_fit_ratio(k_mins, omega_sups),
        commutator_ratio=_fit_ratio(k_mins, commutator_sups),
    )
