import pytest

from qcalc.report import MEASURED
from qcalc.oprep.builders import SpecViolationError
from qcalc.oprep.probes import growth_probe, bounded_control_spec

from .util import LOG

K_MINS = [-6, -7, -8, -9]


def test_growth_probe_of_standard_operator():
    result = growth_probe('1/2', K_MINS, n_max=6, k_max=4, logger=LOG)
    assert result.k_mins.tolist() == K_MINS
    assert len(result.omega_sups) == 4
    assert len(result.ratios) == 3
    # Omega(b) = lambda pi(b) T grows like q^k_min
    assert result.fitted_ratio == pytest.approx(2.0, rel=1e-6)
    for ratio in result.ratios:
        assert ratio == pytest.approx(2.0, rel=1e-6)

    assert result.commutator_ratio is not None
    assert result.commutator_ratio > 1.5

    record = result.record(0.5, variant='THEOREM_1')
    assert record.status == MEASURED
    assert 'expected q^-1 = 2' in record.detail


def test_growth_probe_of_bounded_control():
    with pytest.raises(SpecViolationError):
        growth_probe('1/2', K_MINS, n_max=6, k_max=4, spec=bounded_control_spec())

    result = growth_probe('1/2', K_MINS, n_max=6, k_max=4, spec=bounded_control_spec(), validate=False)
    assert result.fitted_ratio == pytest.approx(1.0, rel=1e-6)


def test_growth_probe_with_single_window():
    result = growth_probe('1/3', [-6], n_max=6, k_max=4)
    assert len(result.ratios) == 0
    assert result.fitted_ratio is None
    assert 'n/a' in result.record(1 / 3).detail
