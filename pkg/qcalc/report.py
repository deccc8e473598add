"""
The verification suites of this package do not raise exceptions for failing identities. Instead, every
single check produces one :class:`CheckRecord` and the suites return lists of those. This module
defines the record type and the two serializations of record lists: a JSON array with a stable field
order and an aligned text table.
"""
import dataclasses
import typing as t

import orjson

import qcalc.typing as tc
from qcalc.util import TEMPLATE_ENV

# A printed identity which holds exactly (or within the tolerance)
HOLDS = 'holds'
# A printed identity which fails, but for which the reduction produced a corrected version which then
# was verified. The correction is described in the "detail" field.
CORRECTED = 'corrected'
FAILED = 'failed'
# Numeric measurements such as ranks, growth ratios and Gram constants, which are reported next to an
# expected value rather than asserted.
MEASURED = 'measured'

RECORD_FIELDS = (
    'check',
    'calculus',
    'variant',
    'witness',
    'status',
    'pass',
    'max_residual',
    'tolerance',
    'mask_radius',
    'window',
    'detail',
)


@dataclasses.dataclass(frozen=True)
class CheckRecord:
    """
    The outcome of a single check.

    :ivar check: The name of the check suite, e.g. "omega_gamma" or "omega_vanishing"
    :ivar calculus: The calculus id the check refers to, if any
    :ivar variant: The operator variant, e.g. "THEOREM_1", if any
    :ivar witness: The element or relation which was checked, rendered as text
    :ivar status: One of "holds", "corrected", "failed", "measured"
    :ivar max_residual: For numeric checks the largest relative interior residual
    :ivar tolerance: The tolerance the residual was compared against
    :ivar mask_radius: The support radius used for the interior mask
    :ivar window: The lattice window of the numeric check
    :ivar detail: Free text for corrections, measured constants and discrepancies
    """
    check: str
    calculus: t.Optional[str] = None
    variant: t.Optional[str] = None
    witness: t.Optional[str] = None
    status: str = HOLDS
    max_residual: t.Optional[float] = None
    tolerance: t.Optional[float] = None
    mask_radius: t.Optional[t.Tuple[int, ...]] = None
    window: t.Optional[t.Dict[str, t.Any]] = None
    detail: t.Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.status == FAILED:
            return False
        if self.max_residual is not None and self.tolerance is not None:
            return self.max_residual < self.tolerance
        return True

    def to_dict(self) -> tc.RecordDict:
        values = {
            'check': self.check,
            'calculus': self.calculus,
            'variant': self.variant,
            'witness': self.witness,
            'status': self.status,
            'pass': self.passed,
            'max_residual': self.max_residual,
            'tolerance': self.tolerance,
            'mask_radius': list(self.mask_radius) if self.mask_radius is not None else None,
            'window': self.window,
            'detail': self.detail,
        }
        return {key: values[key] for key in RECORD_FIELDS}


def exact_record(check: str,
                 holds: bool,
                 witness: t.Optional[str] = None,
                 calculus: t.Optional[str] = None,
                 detail: t.Optional[str] = None,
                 ) -> CheckRecord:
    """
    Creates the record of an exact symbolic check, which either holds or fails.
    """
    return CheckRecord(
        check=check,
        calculus=calculus,
        witness=witness,
        status=HOLDS if holds else FAILED,
        detail=detail,
    )


def numeric_record(check: str,
                   residual: float,
                   tolerance: float,
                   witness: t.Optional[str] = None,
                   calculus: t.Optional[str] = None,
                   variant: t.Optional[str] = None,
                   mask_radius: t.Optional[t.Tuple[int, ...]] = None,
                   window: t.Optional[t.Dict[str, t.Any]] = None,
                   detail: t.Optional[str] = None,
                   ) -> CheckRecord:
    """
    Creates the record of a numeric residual check. The status is derived from the comparison of the
    residual with the tolerance.
    """
    residual = float(residual)
    return CheckRecord(
        check=check,
        calculus=calculus,
        variant=variant,
        witness=witness,
        status=HOLDS if residual < tolerance else FAILED,
        max_residual=residual,
        tolerance=tolerance,
        mask_radius=tuple(int(r) for r in mask_radius) if mask_radius is not None else None,
        window=window,
        detail=detail,
    )


def all_passed(records: t.Iterable[CheckRecord]) -> bool:
    return all(record.passed for record in records)


def emit_report(records: t.Sequence[CheckRecord], output_format: str = 'json') -> str:
    """
    Serializes the given records. The "json" format is an indented JSON array with a stable field order,
    the "text" format is an aligned table with the residuals in scientific notation.

    Both formats are deterministic: identical record lists produce identical strings.

    :param records: The records to be serialized
    :param output_format: Either "json" or "text"
    :return: The serialized report
    """
    if output_format == 'json':
        return orjson.dumps(
            [record.to_dict() for record in records],
            option=orjson.OPT_INDENT_2,
        ).decode('utf-8')

    elif output_format == 'text':
        rows = [record.to_dict() for record in records]
        widths = {
            'check': max([len('check')] + [len(row['check']) for row in rows]),
            'calculus': max([len('calculus')] + [len(str(row['calculus'] or '-')) for row in rows]),
            'witness': max([len('witness')] + [len(str(row['witness'] or '-')) for row in rows]),
        }
        template = TEMPLATE_ENV.get_template('report.out.j2')
        return template.render(
            rows=rows,
            widths=widths,
            num_passed=sum(1 for record in records if record.passed),
            num_total=len(records),
        )

    else:
        raise ValueError(f'Unknown report format "{output_format}". Choose either "json" or "text"')
