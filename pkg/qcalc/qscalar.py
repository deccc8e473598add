"""
Exact arithmetic in the coefficient field Q(q) of rational functions in one variable q with rational
coefficients, and the numeric evaluation of such scalars at a concrete value 0 < q < 1.

The field elements are sympy ``FracElement`` objects of the fraction field ``QQ_Q``. These are kept in
canonical form (coprime numerator and denominator) by sympy itself, which means that equality is
decidable by ``==`` and that the elements are hashable and can be used as dictionary keys. Everything
else in the package builds on the constants and helpers defined here:

.. code-block:: python

    from qcalc.qscalar import Q, LAMBDA, LAMBDA_PLUS, evaluate_at

    value = LAMBDA * LAMBDA_PLUS      # q^2 - q^-2
    print(evaluate_at(value, '1/2'))  # -15/4
"""
import functools
import typing as t

import sympy as sp
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement
from sympy.polys.matrices import DomainMatrix
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations
from sympy.parsing.sympy_parser import convert_xor

Q_SYMBOL = sp.Symbol('q')
QQ_Q = QQ.frac_field(Q_SYMBOL)

ScalarQ = FracElement
ScalarLike = t.Union[FracElement, int, str, sp.Rational]

PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor, )


class PoleError(ZeroDivisionError):
    pass


class ScalarParseError(ValueError):
    pass


class QRangeError(ValueError):
    pass


# == CONSTANTS ==

ZERO: ScalarQ = QQ_Q.zero
ONE: ScalarQ = QQ_Q.one
Q: ScalarQ = QQ_Q.gens[0]
Q_INV: ScalarQ = ONE / Q
# lambda = q - q^-1 and lambda_+ = q + q^-1 appear in almost every formula
LAMBDA: ScalarQ = Q - Q_INV
LAMBDA_PLUS: ScalarQ = Q + Q_INV


def scalar(value: ScalarLike) -> ScalarQ:
    """
    Converts the given ``value`` into an element of the field Q(q). Accepted are field elements
    themselves, python integers, fractions, sympy rationals and sympy expressions in the symbol q, as
    well as strings which are then parsed with :func:`parse_scalar`.

    :param value: The value to be converted
    :return: The canonical field element
    """
    if isinstance(value, FracElement) and value.field == QQ_Q.field:
        return value

    if isinstance(value, str):
        return parse_scalar(value)

    try:
        return QQ_Q.from_sympy(sp.sympify(value))
    except Exception as exc:
        raise ScalarParseError(f'The value "{value}" of type {type(value)} cannot be converted into an '
                               f'element of Q(q): {exc}')


def epsilon_scalar(sign: int) -> ScalarQ:
    """
    Returns the sign of the 4D calculi as a field element. Only the values +1 and -1 are admissible.
    """
    if sign not in (1, -1):
        raise ValueError(f'The sign epsilon has to be either +1 or -1, not {sign}')

    return ONE if sign == 1 else -ONE


@functools.lru_cache(maxsize=None)
def q_power(exponent: int) -> ScalarQ:
    return Q ** exponent


def scalar_arith(op: str, lhs: ScalarQ, rhs: t.Optional[ScalarQ] = None) -> ScalarQ:
    """
    Applies the field operation ``op`` to the given operands. The operation is one of "add", "mul",
    "neg" or "inv", where the latter two are unary and ignore ``rhs``.

    :raises PoleError: For the inversion of zero
    :return: The canonical result
    """
    lhs = scalar(lhs)
    if op == 'neg':
        return -lhs
    elif op == 'inv':
        if not lhs:
            raise PoleError('The zero element of Q(q) cannot be inverted')
        return ONE / lhs

    if rhs is None:
        raise ValueError(f'The binary operation "{op}" requires a second operand')

    rhs = scalar(rhs)
    if op == 'add':
        return lhs + rhs
    elif op == 'mul':
        return lhs * rhs
    else:
        raise ValueError(f'Unknown scalar operation "{op}". Choose one of add, mul, neg, inv')


# == CANONICAL FORM ==

class LaurentParts(t.NamedTuple):
    """
    The canonical decomposition ``s = q^offset * N(q) / D(q)`` of a scalar, where neither N nor D is
    divisible by q and D is monic. The coefficient tuples are given in ascending order of the exponents.
    """
    offset: int
    numerator: t.Tuple[sp.Rational, ...]
    denominator: t.Tuple[sp.Rational, ...]


def _coefficient_map(poly) -> t.Dict[int, sp.Rational]:
    return {exp: QQ.to_sympy(coeff) for (exp, ), coeff in poly.terms()}


def laurent_parts(s: ScalarQ) -> LaurentParts:
    s = scalar(s)
    if not s:
        return LaurentParts(0, (), (sp.Integer(1), ))

    numerator = _coefficient_map(s.numer)
    denominator = _coefficient_map(s.denom)
    num_low = min(numerator)
    den_low = min(denominator)
    leading = denominator[max(denominator)]

    def shifted(coefficients: dict, low: int, factor: sp.Rational) -> t.Tuple[sp.Rational, ...]:
        high = max(coefficients)
        return tuple(coefficients.get(exp, sp.Integer(0)) / factor for exp in range(low, high + 1))

    return LaurentParts(
        offset=num_low - den_low,
        numerator=shifted(numerator, num_low, leading),
        denominator=shifted(denominator, den_low, leading),
    )


def canonical(s: ScalarQ) -> ScalarQ:
    """
    Returns the canonical representative of ``s``, which is rebuilt from its Laurent parts. Since the
    field elements are always kept canonical this is idempotent and returns an element equal to ``s``.
    """
    parts = laurent_parts(s)
    numerator = sum((scalar(c) * q_power(i) for i, c in enumerate(parts.numerator)), ZERO)
    denominator = sum((scalar(c) * q_power(i) for i, c in enumerate(parts.denominator)), ZERO)
    return q_power(parts.offset) * numerator / denominator


# == TEXT GRAMMAR ==

def render_scalar(s: ScalarQ) -> str:
    """
    Renders the scalar in the text grammar which uses "^" for powers, for example "(q^2 - 1)/q". The
    rendering is deterministic and can be parsed back with :func:`parse_scalar`.
    """
    expression = QQ_Q.to_sympy(scalar(s))
    return sp.sstr(expression).replace('**', '^')


def parse_scalar(text: str) -> ScalarQ:
    """
    Parses the text representation of a rational function in q, e.g. "(q^2-1)/(q^2+1)" or "1/2".

    :raises ScalarParseError: If the text is not a rational function in the single symbol q
    """
    try:
        expression = parse_expr(
            text,
            local_dict={'q': Q_SYMBOL},
            transformations=PARSE_TRANSFORMATIONS,
        )
        return QQ_Q.from_sympy(sp.sympify(expression))
    except Exception as exc:
        raise ScalarParseError(f'The string "{text}" could not be parsed as a rational function of q: '
                               f'{exc}')


# == NUMERIC EVALUATION ==

def parse_q_value(value: t.Union[str, int, float, sp.Rational]) -> sp.Rational:
    """
    Converts the given value into an exact rational number. Strings like "1/2" are interpreted exactly,
    floats are converted by their exact binary value.

    :raises ScalarParseError: If the value is not a number
    """
    try:
        rational = sp.Rational(value)
    except Exception as exc:
        raise ScalarParseError(f'The q value "{value}" is not a rational number: {exc}')

    return rational


def check_q_value(value: t.Union[str, int, float, sp.Rational]) -> sp.Rational:
    rational = parse_q_value(value)
    if not (0 < rational < 1):
        raise QRangeError(f'The q value {rational} has to lie in the open interval (0, 1)')

    return rational


def _evaluate_poly(poly, value: sp.Rational) -> sp.Rational:
    return sum((QQ.to_sympy(coeff) * value ** exp for (exp, ), coeff in poly.terms()), sp.Integer(0))


@functools.lru_cache(maxsize=None)
def _evaluate_cached(s: ScalarQ, value: sp.Rational) -> sp.Rational:
    denominator = _evaluate_poly(s.denom, value)
    if denominator == 0:
        raise PoleError(f'The scalar {render_scalar(s)} has a pole at q = {value}')

    return _evaluate_poly(s.numer, value) / denominator


def evaluate_at(s: ScalarQ, q_value: t.Union[str, int, float, sp.Rational]) -> sp.Rational:
    """
    Substitutes the exact rational ``q_value`` into the scalar ``s``. The computation is exact.

    A pole of ``s`` at the given value is reported before the range of the value is checked, so that
    ``evaluate_at(1/(1-q), 1)`` raises a :class:`PoleError`.

    :raises PoleError: If the denominator vanishes at q_value
    :raises QRangeError: If q_value is not within (0, 1)
    :return: The exact rational value
    """
    s = scalar(s)
    value = parse_q_value(q_value)
    result = _evaluate_cached(s, value)
    check_q_value(value)
    return result


def evaluate_float(s: ScalarQ, q_value: t.Union[str, int, float, sp.Rational]) -> float:
    return float(evaluate_at(s, q_value))


# == EXACT LINEAR ALGEBRA ==

def exact_rank(rows: t.Sequence[t.Sequence[ScalarQ]]) -> int:
    """
    Returns the rank of the matrix with the given rows over the field Q(q).
    """
    if len(rows) == 0 or len(rows[0]) == 0:
        return 0

    matrix = DomainMatrix([[scalar(v) for v in row] for row in rows], (len(rows), len(rows[0])), QQ_Q)
    return matrix.rank()


def solve_linear(rows: t.Sequence[t.Sequence[ScalarQ]],
                 rhs: t.Sequence[ScalarQ],
                 ) -> t.Optional[t.List[ScalarQ]]:
    """
    Solves the linear system ``M x = b`` exactly over Q(q), where ``rows`` are the rows of M and ``rhs``
    is b. Free variables of the solution are set to zero.

    :return: A particular solution or None if the system is inconsistent
    """
    num_rows = len(rows)
    num_cols = len(rows[0]) if num_rows else 0
    if num_cols == 0:
        return [] if all(not scalar(b) for b in rhs) else None

    augmented = DomainMatrix(
        [[scalar(v) for v in row] + [scalar(b)] for row, b in zip(rows, rhs)],
        (num_rows, num_cols + 1),
        QQ_Q,
    )
    reduced, pivots = augmented.rref()
    if num_cols in pivots:
        return None

    values = reduced.to_Matrix()
    solution = [ZERO for _ in range(num_cols)]
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = QQ_Q.from_sympy(values[row_index, num_cols])

    return solution
