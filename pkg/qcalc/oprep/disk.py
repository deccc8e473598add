"""
The quantum disk as the localized element z = a c^-1.

With R = 0 the operator F of a T with w T w* = q T defines a commutator representation of the calculus of
the quantum disk

.. code-block:: text

    z* z - q^2 z z* = q^2 - 1
    dz z = q^2 z dz,    dz z* = q^-2 z* dz
    dz* z = q^2 z dz*,  dz* z* = q^-2 z* dz*

and the commutators have the closed forms d(z) = i lambda q^-n w* T* and d(z*) = -i lambda q^(-n-1) w T on
the level n.
"""
import logging
import dataclasses
import typing as t

import numpy as np

from qcalc.suq2 import AlgebraElement
from qcalc.suq2 import normal_form, star
from qcalc.report import CheckRecord
from qcalc.report import numeric_record
from qcalc.config import DEFAULT_TOLERANCE
from qcalc.oprep.lattice import LatticeWindow, LatticeOperator
from qcalc.oprep.lattice import diagonal_matrix
from qcalc.oprep.builders import Representation, FOperator, RepConfig, OperatorRecipe
from qcalc.oprep.builders import build_rep, build_F, represent, disk_spec
from qcalc.oprep.checks import commutator_d
from qcalc.util import NULL_LOGGER


@dataclasses.dataclass(frozen=True, eq=False)
class DiskRep:
    rep: Representation
    F: FOperator
    z: AlgebraElement
    z_star: AlgebraElement


def disk_rep(window: LatticeWindow,
             T: t.Optional[OperatorRecipe] = None,
             logger: logging.Logger = NULL_LOGGER,
             ) -> DiskRep:
    """
    Builds the representation and the operator F with R = 0 for the disk element z = a c^-1.

    :raises SpecViolationError: If T does not satisfy w T w* = q T
    """
    rep = build_rep(RepConfig(window=window), logger=logger)
    F = build_F(rep, disk_spec(T), logger=logger)
    z = normal_form(['a', 'c-'], localized=True)
    return DiskRep(rep=rep, F=F, z=z, z_star=star(z))


def verify_disk(disk: DiskRep, tolerance: float = DEFAULT_TOLERANCE) -> t.List[CheckRecord]:
    rep, F = disk.rep, disk.F
    q = rep.q
    lam = q - 1 / q
    z, z_ = represent(rep, disk.z), represent(rep, disk.z_star)
    dz, dz_ = commutator_d(rep, F, disk.z), commutator_d(rep, F, disk.z_star)

    n = rep.window.n_values()
    closed = rep.lift(rep.w.adjoint() @ F.T.adjoint(), diagonal_matrix(np.power(1 / q, n))) * (1j * lam)
    closed_ = rep.lift(rep.w @ F.T, diagonal_matrix(np.power(1 / q, n + 1))) * (-1j * lam)

    claims: t.List[t.Tuple[str, str, LatticeOperator]] = [
        ('disk_relation', 'z* z - q^2 z z* = q^2 - 1', z_ @ z - (z @ z_) * q ** 2 - rep.identity() * (q ** 2 - 1)),
        ('disk_calculus', 'dz z = q^2 z dz', dz @ z - (z @ dz) * q ** 2),
        ('disk_calculus', 'dz z* = q^-2 z* dz', dz @ z_ - (z_ @ dz) / q ** 2),
        ('disk_calculus', 'dz* z = q^2 z dz*', dz_ @ z - (z @ dz_) * q ** 2),
        ('disk_calculus', 'dz* z* = q^-2 z* dz*', dz_ @ z_ - (z_ @ dz_) / q ** 2),
        ('disk_closed_form', 'd(z) = i lambda q^-n w* T*', dz - closed),
        ('disk_closed_form', 'd(z*) = -i lambda q^(-n-1) w T', dz_ - closed_),
    ]
    return [
        numeric_record(
            check=check,
            residual=rep.residual(operator),
            tolerance=tolerance,
            witness=witness,
            variant=F.spec.label,
            mask_radius=operator.radius,
            window=rep.window.to_dict(),
        )
        for check, witness, operator in claims
    ]
