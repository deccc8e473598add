"""
Left-covariant first order differential calculi on O(SU_q(2)).

A calculus is described by a :class:`CalculusDescriptor`, which holds the basis of the left-invariant
forms, the rules for moving a generator from the right of a basis form to its left (the commutation
table), the differentials of the generators, the involution on the basis forms and the generators of the
right ideal which classifies the calculus. With these tables every one-form can be brought into the
left normal form ``sum_j x_j * w_j``, which is represented by :class:`OneForm`.

Five calculi are available through :func:`make_calculus`:

- "3D": the three dimensional calculus with the forms w0 = w(b), w1 = w(a), w2 = w(c)
- "4D+" and "4D-": the four dimensional bicovariant calculi with the forms w1 .. w4
- "Q3+" and "Q3-": the three dimensional quotients of the 4D calculi obtained by setting w4 = 0

.. code-block:: python

    from qcalc.fodc import make_calculus, differential
    from qcalc.suq2 import generator

    calc = make_calculus('3D')
    print(differential(generator('b'), calc))  # a*w0 + (-q^2)*b*w1
"""
import random
import logging
import dataclasses
import typing as t

from qcalc.qscalar import ScalarQ, ScalarLike
from qcalc.qscalar import ZERO, ONE, Q, Q_INV, LAMBDA
from qcalc.qscalar import scalar, epsilon_scalar, exact_rank, solve_linear
from qcalc.suq2 import AlgebraElement, Monomial, UNIT
from qcalc.suq2 import LETTER_MONOMIALS, DEFINING_RELATIONS
from qcalc.suq2 import LocalizationError
from qcalc.suq2 import generator, one, star, antipode, counit, coproduct
from qcalc.suq2 import check_unlocalized, render_element, parse_element, pbw_monomials
from qcalc.report import CheckRecord, exact_record
from qcalc.util import NULL_LOGGER, closest_match

THREE_D = '3D'
FOUR_D_PLUS = '4D+'
FOUR_D_MINUS = '4D-'
Q3_PLUS = 'Q3+'
Q3_MINUS = 'Q3-'
CALCULUS_IDS = (THREE_D, FOUR_D_PLUS, FOUR_D_MINUS, Q3_PLUS, Q3_MINUS)

# Alternative spellings which are accepted by make_calculus
CALCULUS_ALIASES = {
    'THREE_D': THREE_D,
    'FOUR_D_PLUS': FOUR_D_PLUS,
    'FOUR_D_MINUS': FOUR_D_MINUS,
    'Q3_PLUS': Q3_PLUS,
    'Q3_MINUS': Q3_MINUS,
}

# A row of the commutation table or the differential table: basis form -> left coefficient
FormRow = t.Dict[str, AlgebraElement]


class UnknownCalculusError(KeyError):
    pass


@dataclasses.dataclass(frozen=True, eq=False)
class CalculusDescriptor:
    """
    The complete description of a left-covariant calculus.

    :ivar id: One of the ids in ``CALCULUS_IDS``
    :ivar form_basis: The names of the basis forms, e.g. ("w0", "w1", "w2")
    :ivar commutation_table: Maps (form, generator) to the left normal form of ``form * generator``
    :ivar d_table: Maps each generator to its differential
    :ivar star_table: Maps each basis form to its involution, which has scalar coefficients
    :ivar right_ideal: The generators of the right ideal of the calculus
    :ivar epsilon_sign: The sign of the 4D calculi and their quotients, None for the 3D calculus
    :ivar localizable: Whether the inverses of b and c may be pushed through the forms
    """
    id: str
    form_basis: t.Tuple[str, ...]
    commutation_table: t.Dict[t.Tuple[str, str], FormRow]
    d_table: t.Dict[str, FormRow]
    star_table: t.Dict[str, t.Dict[str, ScalarQ]]
    right_ideal: t.Tuple[AlgebraElement, ...]
    epsilon_sign: t.Optional[int] = None
    localizable: bool = False
    _cache: dict = dataclasses.field(init=False, default_factory=dict, repr=False)

    def commutation_row(self, form: str, letter: str) -> FormRow:
        """
        Returns the left normal form of ``form * letter``. For the inverse letters "b-" and "c-" the row is
        derived from the row of b (resp. c), which has to be of the form w * g = k * g * w.
        """
        if letter in ('a', 'b', 'c', 'd'):
            return self.commutation_table[(form, letter)]

        if not self.localizable:
            raise LocalizationError(f'The calculus {self.id} does not support the inverses of b and c')

        key = ('inverse_row', form, letter)
        if key not in self._cache:
            base = letter[0]
            row = self.commutation_table[(form, base)]
            factor = row[form].coefficient(LETTER_MONOMIALS[base]) if form in row else ZERO
            if len(row) != 1 or not factor or row[form] != generator(base).scale(factor):
                raise LocalizationError(f'The form {form} does not commute with {base} up to a scalar, so '
                                        f'the inverse of {base} cannot be pushed through it')

            self._cache[key] = {form: generator(letter).scale(ONE / factor)}

        return self._cache[key]

    def render(self) -> str:
        lines = [f'calculus {self.id} with forms {", ".join(self.form_basis)}']
        for letter in ('a', 'b', 'c', 'd'):
            lines.append(f'  d{letter} = {OneForm(self, self.d_table[letter]).render()}')
        for (form, letter), row in sorted(self.commutation_table.items()):
            lines.append(f'  {form}*{letter} = {OneForm(self, row).render()}')
        for form in self.form_basis:
            star_form_ = OneForm(self, {name: AlgebraElement.constant(value)
                                        for name, value in self.star_table[form].items()})
            lines.append(f'  {form}* = {star_form_.render()}')
        lines.append('  right ideal: ' + ', '.join(render_element(g) for g in self.right_ideal))
        return '\n'.join(lines)


class OneForm:
    """
    A one-form in the left normal form ``sum_j x_j * w_j``. The components map the names of the basis forms
    to the left coefficients, zero components are never stored.

    Algebra elements multiply one-forms from the left directly, the multiplication from the right uses
    the commutation table of the calculus (see :func:`push_left`):

    .. code-block:: python

        form = generator('a') * omega_gamma(generator('b'), calc)  # a*w0
        form = form * generator('a')                               # (1/q)*a^2*w0
    """
    __slots__ = ('calculus', 'components')

    def __init__(self,
                 calculus: CalculusDescriptor,
                 components: t.Optional[t.Mapping[str, AlgebraElement]] = None):
        self.calculus = calculus
        self.components: FormRow = {
            form: coefficient
            for form, coefficient in (components or {}).items()
            if coefficient
        }

    @classmethod
    def basis(cls, calculus: CalculusDescriptor, form: str) -> 'OneForm':
        if form not in calculus.form_basis:
            raise KeyError(f'The calculus {calculus.id} has no basis form "{form}"')
        return cls(calculus, {form: one()})

    def component(self, form: str) -> AlgebraElement:
        return self.components.get(form, AlgebraElement())

    def is_zero(self) -> bool:
        return not self.components

    def is_invariant(self) -> bool:
        """
        Whether all coefficients are scalars, which is the case for left-invariant forms.
        """
        return all(coefficient.is_constant() for coefficient in self.components.values())

    def scalar_vector(self) -> t.List[ScalarQ]:
        """
        Returns the scalar coefficients of a left-invariant form in the order of the form basis.
        """
        if not self.is_invariant():
            raise ValueError(f'The form {self.render()} is not left-invariant')
        return [self.component(form).constant_term() for form in self.calculus.form_basis]

    def scale(self, value: ScalarLike) -> 'OneForm':
        return OneForm(self.calculus, {form: x.scale(value) for form, x in self.components.items()})

    def drop(self, form: str) -> 'OneForm':
        return OneForm(self.calculus, {name: x for name, x in self.components.items() if name != form})

    def render(self) -> str:
        if not self.components:
            return '0'

        parts = []
        for form in self.calculus.form_basis:
            if form not in self.components:
                continue
            coefficient = self.components[form]
            if coefficient == one():
                parts.append(form)
            else:
                parts.append(f'({render_element(coefficient)})*{form}')
        return ' + '.join(parts)

    def __add__(self, other: 'OneForm') -> 'OneForm':
        if not isinstance(other, OneForm):
            return NotImplemented
        components = dict(self.components)
        for form, coefficient in other.components.items():
            components[form] = components[form] + coefficient if form in components else coefficient
        return OneForm(self.calculus, components)

    def __neg__(self) -> 'OneForm':
        return OneForm(self.calculus, {form: -x for form, x in self.components.items()})

    def __sub__(self, other: 'OneForm') -> 'OneForm':
        if not isinstance(other, OneForm):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other) -> 'OneForm':
        if isinstance(other, AlgebraElement):
            return OneForm(self.calculus, {form: other * x for form, x in self.components.items()})
        return self.scale(other)

    def __mul__(self, other) -> 'OneForm':
        if isinstance(other, AlgebraElement):
            return push_left(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.calculus.id == other.calculus.id and self.components == other.components

    def __hash__(self):
        return hash((self.calculus.id, frozenset(self.components.items())))

    def __bool__(self):
        return bool(self.components)

    def __repr__(self):
        return f'OneForm[{self.calculus.id}]({self.render()})'

    def __str__(self):
        return self.render()


def zero_form(calc: CalculusDescriptor) -> OneForm:
    return OneForm(calc)


# == REDUCTION ==

def _push_monomial(calc: CalculusDescriptor, form: str, monomial: Monomial) -> FormRow:
    key = ('push', form, monomial)
    if key in calc._cache:
        return calc._cache[key]

    current: FormRow = {form: one()}
    for letter in monomial.letters():
        result: FormRow = {}
        for name, coefficient in current.items():
            for target, factor in calc.commutation_row(name, letter).items():
                product = coefficient * factor
                result[target] = result[target] + product if target in result else product
        current = {name: x for name, x in result.items() if x}

    calc._cache[key] = current
    return current


def push_left(form: OneForm, right_factor: AlgebraElement) -> OneForm:
    """
    Computes the left normal form of ``form * right_factor`` by moving the algebra element from the right
    of every basis form to its left with the commutation table.

    :raises LocalizationError: If the factor contains inverses and the calculus is not localizable
    """
    calc = form.calculus
    if right_factor.localized and not calc.localizable:
        raise LocalizationError(f'The calculus {calc.id} does not support the localized element '
                                f'{right_factor}')

    result: FormRow = {}
    for name, coefficient in form.components.items():
        for monomial, value in right_factor.terms.items():
            for target, factor in _push_monomial(calc, name, monomial).items():
                product = (coefficient * factor).scale(value)
                result[target] = result[target] + product if target in result else product

    return OneForm(calc, result)


def _differential_letter(calc: CalculusDescriptor, letter: str) -> OneForm:
    if letter in calc.d_table:
        return OneForm(calc, calc.d_table[letter])

    if not calc.localizable:
        raise LocalizationError(f'The calculus {calc.id} does not support the inverses of b and c')

    # d(g^-1) = -g^-1 d(g) g^-1
    inverse = generator(letter)
    base_form = OneForm(calc, calc.d_table[letter[0]])
    return -(inverse * push_left(base_form, inverse))


def differential_word(letters: t.Sequence[str], calc: CalculusDescriptor) -> OneForm:
    """
    Computes the differential of the unreduced product of the given letters with the Leibniz rule
    ``d(xg) = x dg + dx g``.
    """
    prefix = one()
    result = zero_form(calc)
    for letter in letters:
        element = generator(letter)
        result = prefix * _differential_letter(calc, letter) + push_left(result, element)
        prefix = prefix * element

    return result


def _differential_monomial(calc: CalculusDescriptor, monomial: Monomial) -> OneForm:
    key = ('d', monomial)
    if key not in calc._cache:
        calc._cache[key] = differential_word(monomial.letters(), calc)
    return calc._cache[key]


def differential(x: AlgebraElement, calc: CalculusDescriptor) -> OneForm:
    """
    The differential of the calculus, extended from the generator table by linearity and the Leibniz rule.

    :raises LocalizationError: For localized elements in a calculus which is not localizable
    """
    if x.localized and not calc.localizable:
        raise LocalizationError(f'The calculus {calc.id} does not support the localized element {x}')

    result = zero_form(calc)
    for monomial, coefficient in x.terms.items():
        if monomial == UNIT:
            continue
        result = result + _differential_monomial(calc, monomial).scale(coefficient)

    return result


def _omega_gamma_monomial(calc: CalculusDescriptor, monomial: Monomial) -> OneForm:
    key = ('omega', monomial)
    if key not in calc._cache:
        result = zero_form(calc)
        for (left, right), coefficient in coproduct(AlgebraElement.monomial(monomial)).terms.items():
            left_factor = antipode(AlgebraElement.monomial(left)).scale(coefficient)
            result = result + left_factor * _differential_monomial(calc, right)
        calc._cache[key] = result

    return calc._cache[key]


def omega_gamma(x: AlgebraElement, calc: CalculusDescriptor) -> OneForm:
    """
    The left-invariant form ``S(x_(1)) d x_(2)``. It has scalar coefficients and vanishes exactly on the
    right ideal of the calculus.
    """
    check_unlocalized(x, 'omega_gamma')
    result = zero_form(calc)
    for monomial, coefficient in x.terms.items():
        result = result + _omega_gamma_monomial(calc, monomial).scale(coefficient)
    return result


def star_form(form: OneForm) -> OneForm:
    """
    The involution on one-forms, ``(x w)* = w* x*``, where the involution of the basis forms is given by
    the star table of the calculus.
    """
    calc = form.calculus
    result = zero_form(calc)
    for name, coefficient in form.components.items():
        basis_star = OneForm(calc, {
            target: AlgebraElement.constant(value)
            for target, value in calc.star_table[name].items()
        })
        result = result + push_left(basis_star, star(coefficient))
    return result


def star_of_omega_gamma(x: AlgebraElement, calc: CalculusDescriptor) -> OneForm:
    """
    Computes the involution of ``w(x) = S(x_(1)) d x_(2)`` from the axiom ``(y dz)* = d(z*) y*`` without
    using the star table of the calculus.
    """
    check_unlocalized(x, 'star_of_omega_gamma')
    result = zero_form(calc)
    for (left, right), coefficient in coproduct(x).terms.items():
        right_star = star(AlgebraElement.monomial(right))
        left_star = star(antipode(AlgebraElement.monomial(left)))
        result = result + push_left(differential(right_star, calc), left_star).scale(coefficient)
    return result


def derive_star_table(calc: CalculusDescriptor) -> t.Dict[str, t.Dict[str, ScalarQ]]:
    """
    Solves for the unique involution of the basis forms which is consistent with the axiom
    ``(y dz)* = d(z*) y*``. The involutions of w(a), w(b), w(c), w(d) are computed from the axiom, and the
    linear system which expresses them through the involutions of the basis forms is solved exactly.

    :raises ValueError: If the forms w(g) of the generators do not span the invariant forms
    """
    generators = [generator(name) for name in ('a', 'b', 'c', 'd')]
    rows = [omega_gamma(g, calc).scalar_vector() for g in generators]
    if exact_rank(rows) != len(calc.form_basis):
        raise ValueError(f'The forms w(a), w(b), w(c), w(d) do not span the invariant forms of {calc.id}')

    targets = [star_of_omega_gamma(g, calc).scalar_vector() for g in generators]
    table = {form: {} for form in calc.form_basis}
    for k, target_form in enumerate(calc.form_basis):
        column = solve_linear(rows, [target[k] for target in targets])
        if column is None:
            raise ValueError(f'There is no involution of the basis forms of {calc.id} which is '
                             f'consistent with the differential')
        for j, form in enumerate(calc.form_basis):
            if column[j]:
                table[form][target_form] = column[j]

    return table


# == THE CALCULI ==

def _row(*entries: t.Tuple[str, ScalarLike, str]) -> FormRow:
    """
    Builds a table row from (form, coefficient, generator) entries, each standing for coefficient * g * form.
    Use "1" as the generator for scalar coefficients.
    """
    row: FormRow = {}
    for form, coefficient, name in entries:
        element = one() if name == '1' else generator(name)
        element = element.scale(coefficient)
        row[form] = row[form] + element if form in row else element
    return row


def _three_d() -> CalculusDescriptor:
    q2 = Q ** 2
    table = {}
    for form in ('w0', 'w2'):
        # q w_j a = a w_j and w_j b = q b w_j for j = 0, 2
        table[(form, 'a')] = _row((form, Q_INV, 'a'))
        table[(form, 'b')] = _row((form, Q, 'b'))
        table[(form, 'c')] = _row((form, Q_INV, 'c'))
        table[(form, 'd')] = _row((form, Q, 'd'))

    table[('w1', 'a')] = _row(('w1', ONE / q2, 'a'))
    table[('w1', 'b')] = _row(('w1', q2, 'b'))
    table[('w1', 'c')] = _row(('w1', ONE / q2, 'c'))
    table[('w1', 'd')] = _row(('w1', q2, 'd'))

    d_table = {
        'a': _row(('w1', ONE, 'a'), ('w2', ONE, 'b')),
        'b': _row(('w0', ONE, 'a'), ('w1', -q2, 'b')),
        'c': _row(('w1', ONE, 'c'), ('w2', ONE, 'd')),
        'd': _row(('w0', ONE, 'c'), ('w1', -q2, 'd')),
    }

    right_ideal = tuple(parse_element(text) for text in (
        'b^2',
        'c^2',
        'b*c',
        '(a - 1)*b',
        '(a - 1)*c',
        'q^2*a + d - (q^2 + 1)',
    ))

    descriptor = CalculusDescriptor(
        id=THREE_D,
        form_basis=('w0', 'w1', 'w2'),
        commutation_table=table,
        d_table=d_table,
        star_table={},
        right_ideal=right_ideal,
        epsilon_sign=None,
        localizable=True,
    )
    # The involution of the 3D forms is not tabulated but derived from the differential
    return dataclasses.replace(descriptor, star_table=derive_star_table(descriptor))


def _four_d_tables(sign: int) -> t.Tuple[t.Dict[t.Tuple[str, str], FormRow], t.Dict[str, t.Dict[str, ScalarQ]]]:
    e = epsilon_scalar(sign)
    l2q = LAMBDA ** 2 * Q_INV
    table = {
        ('w1', 'a'): _row(('w1', e * Q, 'a'), ('w3', e, 'b'), ('w4', e * l2q, 'a')),
        ('w1', 'b'): _row(('w1', e * Q_INV, 'b'), ('w2', e, 'a')),
        ('w1', 'c'): _row(('w1', e * Q, 'c'), ('w3', e, 'd'), ('w4', e * l2q, 'c')),
        ('w1', 'd'): _row(('w1', e * Q_INV, 'd'), ('w2', e, 'c')),
        ('w2', 'a'): _row(('w2', e, 'a'), ('w4', e * l2q, 'b')),
        ('w2', 'b'): _row(('w2', e, 'b')),
        ('w2', 'c'): _row(('w2', e, 'c'), ('w4', e * l2q, 'd')),
        ('w2', 'd'): _row(('w2', e, 'd')),
        ('w3', 'a'): _row(('w3', e, 'a')),
        ('w3', 'b'): _row(('w3', e, 'b'), ('w4', e * l2q, 'a')),
        ('w3', 'c'): _row(('w3', e, 'c')),
        ('w3', 'd'): _row(('w3', e, 'd'), ('w4', e * l2q, 'c')),
        ('w4', 'a'): _row(('w4', e * Q_INV, 'a')),
        ('w4', 'b'): _row(('w4', e * Q, 'b')),
        ('w4', 'c'): _row(('w4', e * Q_INV, 'c')),
        ('w4', 'd'): _row(('w4', e * Q, 'd')),
    }
    # The invariant forms of the generators
    omega_table = {
        'a': {'w1': e * Q - 1, 'w4': e * Q_INV - 1 + e * l2q},
        'b': {'w2': e},
        'c': {'w3': e},
        'd': {'w1': e * Q_INV - 1, 'w4': e * Q - 1},
    }
    return table, omega_table


def _four_d(sign: int, quotient: bool = False) -> CalculusDescriptor:
    e = epsilon_scalar(sign)
    table, omega_table = _four_d_tables(sign)
    form_basis = ('w1', 'w2', 'w3', 'w4')
    star_table = {
        'w1': {'w1': -ONE},
        'w2': {'w3': -ONE},
        'w3': {'w2': -ONE},
        'w4': {'w4': -ONE},
    }
    if quotient:
        form_basis = ('w1', 'w2', 'w3')
        table = {
            key: {form: x for form, x in row.items() if form != 'w4'}
            for key, row in table.items()
            if key[0] != 'w4'
        }
        omega_table = {name: {form: x for form, x in row.items() if form != 'w4'}
                       for name, row in omega_table.items()}
        del star_table['w4']

    # dg = g_(1) w(g_(2)) with the coproduct of the generators
    d_table: t.Dict[str, FormRow] = {}
    for name in ('a', 'b', 'c', 'd'):
        row: FormRow = {}
        for (left, right), coefficient in coproduct(generator(name)).terms.items():
            left_element = AlgebraElement.monomial(left, coefficient)
            right_name = right.render()
            for form, value in omega_table[right_name].items():
                if not value:
                    continue
                element = left_element.scale(value)
                row[form] = row[form] + element if form in row else element
        d_table[name] = {form: x for form, x in row.items() if x}

    z = parse_element('q^2*a + d') - e * (Q ** 3 + Q_INV)
    a, b, c, d = (generator(name) for name in ('a', 'b', 'c', 'd'))
    q2 = Q ** 2
    right_ideal = [
        b * b,
        c * c,
        b * (a - d),
        c * (a - d),
        a * a + d * d * q2 - (a * d + b * c * Q_INV) * (1 + q2),
        z * b,
        z * c,
        z * (a - d),
        z * (a * q2 + d - (q2 + 1)),
    ]
    if quotient:
        right_ideal.append(a + d * (e * Q))

    if sign == 1:
        calculus_id = Q3_PLUS if quotient else FOUR_D_PLUS
    else:
        calculus_id = Q3_MINUS if quotient else FOUR_D_MINUS

    return CalculusDescriptor(
        id=calculus_id,
        form_basis=form_basis,
        commutation_table=table,
        d_table=d_table,
        star_table=star_table,
        right_ideal=tuple(right_ideal),
        epsilon_sign=sign,
        localizable=False,
    )


_CALCULI: t.Dict[str, CalculusDescriptor] = {}


def make_calculus(calculus_id: str) -> CalculusDescriptor:
    """
    Returns the descriptor of the calculus with the given id. The descriptors are created once and then
    shared, they are immutable apart from their internal reduction caches.

    :raises UnknownCalculusError: If the id is not known
    """
    calculus_id = CALCULUS_ALIASES.get(calculus_id, calculus_id)
    if calculus_id not in CALCULUS_IDS:
        raise UnknownCalculusError(f'There is no calculus with the id "{calculus_id}". '
                                   f'Did you mean: "{closest_match(calculus_id, CALCULUS_IDS)}"?')

    if calculus_id not in _CALCULI:
        if calculus_id == THREE_D:
            _CALCULI[calculus_id] = _three_d()
        elif calculus_id in (FOUR_D_PLUS, FOUR_D_MINUS):
            _CALCULI[calculus_id] = _four_d(1 if calculus_id == FOUR_D_PLUS else -1)
        else:
            _CALCULI[calculus_id] = _four_d(1 if calculus_id == Q3_PLUS else -1, quotient=True)

    return _CALCULI[calculus_id]


def replace_commutation(calc: CalculusDescriptor,
                        form: str,
                        letter: str,
                        row: FormRow,
                        ) -> CalculusDescriptor:
    """
    Returns a copy of the descriptor in which the commutation rule of ``form * letter`` is replaced by the
    given row. Everything else, including the differential table, is kept. This is used to check that the
    verification actually detects broken tables.
    """
    table = dict(calc.commutation_table)
    table[(form, letter)] = row
    return dataclasses.replace(calc, commutation_table=table)


def ideal_element(g: AlgebraElement) -> AlgebraElement:
    """
    Returns ``g - counit(g)``, which lies in the kernel of the counit. For the generators of the right ideals
    this is g itself, except for the element a + eps q d of the quotient calculi.
    """
    return g - counit(g)


# == VERIFICATION ==

def verify_calculus(calc: CalculusDescriptor,
                    seed: int = 0,
                    num_samples: int = 20,
                    logger: logging.Logger = NULL_LOGGER,
                    ) -> t.List[CheckRecord]:
    """
    Verifies the tables of the given calculus exactly:

    - the differential of every defining relation of the algebra vanishes (computed on the unreduced words)
    - the invariant form of every right ideal generator vanishes
    - the invariant form vanishes on sampled products ``(g - counit(g)) y`` of a right ideal generator g and
      a monomial y of degree at most 2
    - the right multiplication is associative on sampled triples
    - the involution is consistent with ``(x dy)* = d(y*) x*`` on sampled forms and is involutive
    - the Leibniz rule holds on sampled pairs of monomials of degree at most 3
    - the invariant forms of all monomials up to degree 3 have scalar coefficients and span the form basis

    :param calc: The calculus to verify
    :param seed: The seed for the sampled checks
    :param num_samples: The number of samples for each sampled check
    :return: One record per relation, per ideal generator and per sampled check
    """
    rng = random.Random(seed)
    records: t.List[CheckRecord] = []

    logger.info(f'verifying the differential on the defining relations of {calc.id}')
    for name, relation in DEFINING_RELATIONS:
        total = zero_form(calc)
        for coefficient, word in relation:
            total = total + differential_word(word, calc).scale(coefficient)
        records.append(exact_record(
            check='d_relation',
            holds=total.is_zero(),
            witness=name,
            calculus=calc.id,
            detail=None if total.is_zero() else f'residual: {total.render()}',
        ))

    logger.info(f'verifying the {len(calc.right_ideal)} right ideal generators of {calc.id}')
    for g in calc.right_ideal:
        form = omega_gamma(g, calc)
        records.append(exact_record(
            check='omega_gamma',
            holds=form.is_zero(),
            witness=render_element(g),
            calculus=calc.id,
            detail=None if form.is_zero() else f'residual: {form.render()}',
        ))

    monomials = pbw_monomials(2)

    failures = []
    for _ in range(num_samples):
        g = rng.choice(calc.right_ideal)
        y = AlgebraElement.monomial(rng.choice(monomials))
        form = omega_gamma(ideal_element(g) * y, calc)
        if not form.is_zero():
            failures.append(f'({render_element(g)})*({y})')
    records.append(_sampled_record('absorption', calc, num_samples, failures))

    failures = []
    for _ in range(num_samples):
        form = OneForm.basis(calc, rng.choice(calc.form_basis))
        x = AlgebraElement.monomial(rng.choice(monomials))
        y = AlgebraElement.monomial(rng.choice(monomials))
        if push_left(push_left(form, x), y) != push_left(form, x * y):
            failures.append(f'({form.render()})*({x})*({y})')
    records.append(_sampled_record('push_associativity', calc, num_samples, failures))

    failures = []
    for _ in range(num_samples):
        x = AlgebraElement.monomial(rng.choice(monomials))
        y = AlgebraElement.monomial(rng.choice(monomials))
        lhs = star_form(x * differential(y, calc))
        rhs = push_left(differential(star(y), calc), star(x))
        if lhs != rhs or star_form(lhs) != x * differential(y, calc):
            failures.append(f'({x}) d({y})')
    for form in calc.form_basis:
        basis = OneForm.basis(calc, form)
        if star_form(star_form(basis)) != basis:
            failures.append(f'{form}**')
    records.append(_sampled_record('star_consistency', calc, num_samples, failures))

    monomials = pbw_monomials(3)

    failures = []
    for _ in range(num_samples):
        x = AlgebraElement.monomial(rng.choice(monomials))
        y = AlgebraElement.monomial(rng.choice(monomials))
        lhs = differential(x * y, calc)
        rhs = x * differential(y, calc) + push_left(differential(x, calc), y)
        if lhs != rhs:
            failures.append(f'd(({x})*({y}))')
    records.append(_sampled_record('leibniz', calc, num_samples, failures))

    forms = [omega_gamma(AlgebraElement.monomial(m), calc) for m in monomials]
    invariant = all(form.is_invariant() for form in forms)
    rank = exact_rank([form.scalar_vector() for form in forms]) if invariant else -1
    records.append(exact_record(
        check='omega_gamma_rank',
        holds=invariant and rank == len(calc.form_basis),
        witness=f'rank {rank} of {len(calc.form_basis)}',
        calculus=calc.id,
    ))

    return records


def verify_quotient_reduction(sign: int,
                              seed: int = 0,
                              num_samples: int = 20,
                              logger: logging.Logger = NULL_LOGGER,
                              ) -> CheckRecord:
    """
    Checks on sampled forms ``x dy z`` of total degree at most 3 that the reduction in the quotient calculus
    Q3 agrees with the reduction in the 4D calculus of the same sign after deleting the w4 component.
    """
    full = make_calculus(FOUR_D_PLUS if sign == 1 else FOUR_D_MINUS)
    quotient = make_calculus(Q3_PLUS if sign == 1 else Q3_MINUS)
    logger.info(f'comparing the reductions of {quotient.id} and {full.id}')

    rng = random.Random(seed)
    monomials = pbw_monomials(1)
    failures = []
    for _ in range(num_samples):
        x, y, z = (AlgebraElement.monomial(rng.choice(monomials)) for _ in range(3))
        reduced_full = push_left(x * differential(y, full), z).drop('w4')
        reduced_quotient = push_left(x * differential(y, quotient), z)
        if reduced_full.components != reduced_quotient.components:
            failures.append(f'({x}) d({y}) ({z})')

    return _sampled_record('quotient_reduction', quotient, num_samples, failures)


def _sampled_record(check: str, calc: CalculusDescriptor, num_samples: int, failures: t.List[str]) -> CheckRecord:
    return exact_record(
        check=check,
        holds=not failures,
        witness=f'{num_samples} samples',
        calculus=calc.id,
        detail=None if not failures else 'failed on ' + '; '.join(failures[:5]),
    )
