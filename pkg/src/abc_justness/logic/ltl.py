from dataclasses import dataclass
from pathlib import Path
from typing import TypeAlias

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from abc_justness.concurrency.abstract import AbstractTransition, render_abstract
from abc_justness.syntax.errors import UndeclaredName
from abc_justness.syntax.terms import Broadcast, Discard, Handshake, Label, Spec, parse_label
from abc_justness.utils import detect_encoding

_parser = Lark.open('ltl.lark', rel_to=__file__, parser='lalr')


class LtlSyntaxError(ValueError):
    """Exception raised when formula text does not match the LTL grammar"""

    def __init__(self, detail: str, line: int | None = None, column: int | None = None):
        where = f' at line {line}, column {column}' if line is not None and line > 0 else ''
        super().__init__(f'LTL syntax error{where}: {detail}')
        self.detail: str = detail
        self.line: int | None = line
        self.column: int | None = column


@dataclass(frozen=True)
class LtlTrue:
    pass


@dataclass(frozen=True)
class AtomLabel:
    """Holds in the midway state or derivation of a transition carrying ``label``"""

    label: Label


@dataclass(frozen=True)
class AtomNu:
    """Holds in a derivation of the abstract transition ``nu``"""

    nu: AbstractTransition


@dataclass(frozen=True)
class AtomEn:
    """Holds in a process or derivation where ``nu`` is enabled"""

    nu: AbstractTransition


@dataclass(frozen=True)
class Not:
    operand: 'LtlFormula'


@dataclass(frozen=True)
class And:
    left: 'LtlFormula'
    right: 'LtlFormula'


@dataclass(frozen=True)
class Or:
    left: 'LtlFormula'
    right: 'LtlFormula'


@dataclass(frozen=True)
class Implies:
    left: 'LtlFormula'
    right: 'LtlFormula'


@dataclass(frozen=True)
class Next:
    operand: 'LtlFormula'


@dataclass(frozen=True)
class Until:
    left: 'LtlFormula'
    right: 'LtlFormula'


@dataclass(frozen=True)
class Always:
    operand: 'LtlFormula'


@dataclass(frozen=True)
class Eventually:
    operand: 'LtlFormula'


LtlFormula: TypeAlias = (
    LtlTrue
    | AtomLabel
    | AtomNu
    | AtomEn
    | Not
    | And
    | Or
    | Implies
    | Next
    | Until
    | Always
    | Eventually
)

FairnessSpec: TypeAlias = tuple[LtlFormula, ...]

TRUE = LtlTrue()


def subformulas(formula: LtlFormula) -> tuple[LtlFormula, ...]:
    match formula:
        case Not(operand) | Next(operand) | Always(operand) | Eventually(operand):
            return (operand,)
        case And(left, right) | Or(left, right) | Implies(left, right) | Until(left, right):
            return left, right
    return ()


def closure(*formulas: LtlFormula) -> tuple[LtlFormula, ...]:
    """
    Distinct subformulas of the given formulas, every subformula before its parents.

    Examples
    --------
    >>> phi = parse_ltl('G(<a> => F <d!>)')
    >>> closure(phi)[-1] == phi
    True
    """
    ordered: dict[LtlFormula, None] = {}

    def visit(formula: LtlFormula):
        if formula in ordered:
            return
        for sub in subformulas(formula):
            visit(sub)
        ordered[formula] = None

    for formula in formulas:
        visit(formula)
    return tuple(ordered)


def is_label_only(formula: LtlFormula) -> bool:
    """Whether every atom of a formula is a label atom, so it can be read over midway states."""
    return not any(isinstance(sub, AtomNu | AtomEn) for sub in closure(formula))


def show_ltl(formula: LtlFormula) -> str:
    """
    Render a formula in the concrete syntax accepted by :func:`parse_ltl`.

    Examples
    --------
    >>> show_ltl(parse_ltl('GF <c>'))
    'G F <c>'
    """
    match formula:
        case LtlTrue():
            return 'true'
        case AtomLabel(label):
            return f'<{label}>'
        case AtomNu(nu):
            return f'{{{render_abstract(nu)}}}'
        case AtomEn(nu):
            return f'en({render_abstract(nu)})'
        case Not(operand):
            return f'!{show_ltl(operand)}'
        case Next(operand):
            return f'X {show_ltl(operand)}'
        case Always(operand):
            return f'G {show_ltl(operand)}'
        case Eventually(operand):
            return f'F {show_ltl(operand)}'
        case And(left, right):
            return f'({show_ltl(left)} & {show_ltl(right)})'
        case Or(left, right):
            return f'({show_ltl(left)} | {show_ltl(right)})'
        case Implies(left, right):
            return f'({show_ltl(left)} => {show_ltl(right)})'
        case Until(left, right):
            return f'({show_ltl(left)} U {show_ltl(right)})'
    raise TypeError(f'Not an LTL formula: {formula!r}')


@v_args(inline=True)
class _LtlTransformer(Transformer):
    def __init__(self, spec: Spec | None):
        super().__init__()
        self.spec: Spec | None = spec

    def start(self, formula):
        return formula

    def label(self, token: Token):
        label = parse_label(token[1:-1])
        if self.spec is not None:
            _check_declared(label, self.spec)
        return AtomLabel(label)

    def true(self):
        return TRUE

    def false(self):
        return Not(TRUE)

    def not_(self, operand):
        return Not(operand)

    def next(self, operand):
        return Next(operand)

    def always(self, operand):
        return Always(operand)

    def eventually(self, operand):
        return Eventually(operand)

    def and_(self, left, right):
        return And(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def until(self, left, right):
        return Until(left, right)


def _check_declared(label: Label, spec: Spec):
    match label:
        case Handshake(name, _) if name not in spec.handshake_names:
            raise UndeclaredName(name, 'handshake')
        case Broadcast(name, _) | Discard(name) if name not in spec.broadcast_names:
            raise UndeclaredName(name, 'broadcast')


def _syntax_error(error: UnexpectedInput) -> LtlSyntaxError:
    match error:
        case UnexpectedToken(token=token):
            if token.type == '$END':
                detail = 'unexpected end of input'
            else:
                detail = f'unexpected {str(token)!r}'
        case UnexpectedCharacters(char=char):
            detail = f'unexpected character {char!r}'
        case UnexpectedEOF():
            detail = 'unexpected end of input'
        case _:
            detail = 'invalid input'
    return LtlSyntaxError(detail, getattr(error, 'line', None), getattr(error, 'column', None))


def parse_ltl(text: str, spec: Spec | None = None) -> LtlFormula:
    """
    Parse an LTL formula over label atoms.

    Atoms are labels in angle brackets (``<a>``, ``<'c>``, ``<b!>``, ``<tau>``);
    operators are ``!``, ``&``, ``|``, ``=>``, ``X``, ``U``, ``G`` and ``F``.

    Parameters
    ----------
    text
        Formula text
    spec
        When given, every atom must name a declared action of this specification

    Raises
    ------
    LtlSyntaxError
        If the text does not match the grammar
    UndeclaredName
        If an atom names an action outside the alphabet of ``spec``

    Examples
    --------
    >>> parse_ltl('GF <c>')
    Always(operand=Eventually(operand=AtomLabel(label=Handshake(name='c', barred=False))))
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e) from e
    return _LtlTransformer(spec).transform(tree)


def load_fairness(path: str | Path, spec: Spec | None = None) -> FairnessSpec:
    """
    Read a fairness specification: one formula per line, ``#`` starts a comment.

    Raises
    ------
    LtlSyntaxError
        If a line is not a formula; the reported line is the line in the file
    """
    path = Path(path)
    with path.open(encoding=detect_encoding(path)) as fairness_file:
        lines = fairness_file.read().splitlines()

    formulas = []
    for number, line in enumerate(lines, start=1):
        text = line.split('#', 1)[0].strip()
        if not text:
            continue
        try:
            formulas.append(parse_ltl(text, spec))
        except LtlSyntaxError as e:
            raise LtlSyntaxError(e.detail, number, e.column) from e
    return tuple(formulas)
