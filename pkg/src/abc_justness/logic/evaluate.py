"""
Evaluation of LTL formulas on finite paths and lassos.

Positions of a path are its states. A label atom holds in the midway state or the
derivation of a transition with that label and never in a process. On a finite path
``X`` is false in the last state; on a lasso the last position is followed by the
first position of the cycle, and the temporal operators are computed as fixpoints
over the finitely many positions.
"""

from collections.abc import Sequence

from abc_justness.concurrency.abstract import enabled, occurs
from abc_justness.paths.states import FinitePath, Lasso, Mid, Path
from abc_justness.sos.derivations import is_derivation
from abc_justness.syntax.terms import Spec

from .ltl import (
    Always,
    And,
    AtomEn,
    AtomLabel,
    AtomNu,
    Eventually,
    Implies,
    LtlFormula,
    LtlTrue,
    Next,
    Not,
    Or,
    Until,
    closure,
    show_ltl,
)

_TEMPORAL = ('until', 'eventually', 'always')


class AtomLevelMismatch(ValueError):
    """Exception raised when an atom about derivations is read on a path of midway states"""

    def __init__(self, atom: LtlFormula):
        super().__init__(f'Atom {show_ltl(atom)} needs a path of derivations')
        self.atom: LtlFormula = atom


def _compile(formula: LtlFormula, index: dict[LtlFormula, int]) -> tuple[str, int, int]:
    match formula:
        case LtlTrue():
            return 'true', -1, -1
        case AtomLabel() | AtomNu() | AtomEn():
            return 'atom', -1, -1
        case Not(operand):
            return 'not', index[operand], -1
        case Next(operand):
            return 'next', index[operand], -1
        case Eventually(operand):
            return 'eventually', index[operand], -1
        case Always(operand):
            return 'always', index[operand], -1
        case And(left, right):
            return 'and', index[left], index[right]
        case Or(left, right):
            return 'or', index[left], index[right]
        case Implies(left, right):
            return 'implies', index[left], index[right]
        case Until(left, right):
            return 'until', index[left], index[right]
    raise TypeError(f'Not an LTL formula: {formula!r}')


class Evaluator:
    """
    Truth values of a fixed set of formulas and all their subformulas.

    Values are tuples aligned with :attr:`closure`, where every subformula comes
    before the formulas containing it.

    Parameters
    ----------
    formulas
        Formulas to evaluate
    spec
        Specification, needed only for enabledness atoms
    """

    def __init__(self, formulas: Sequence[LtlFormula], spec: Spec | None = None):
        self.spec: Spec | None = spec
        self.closure: tuple[LtlFormula, ...] = closure(*formulas)
        self.index: dict[LtlFormula, int] = {f: i for i, f in enumerate(self.closure)}
        self._ops: list[tuple[str, int, int]] = [_compile(f, self.index) for f in self.closure]

    def _atom(self, formula: LtlFormula, state) -> bool:
        match formula:
            case AtomLabel(label):
                return (isinstance(state, Mid) or is_derivation(state)) and state.label == label
            case AtomNu() | AtomEn() if isinstance(state, Mid):
                raise AtomLevelMismatch(formula)
            case AtomNu(nu):
                return occurs(nu, state)
            case AtomEn(nu):
                if self.spec is None:
                    raise ValueError('enabledness atoms need the specification')
                return enabled(nu, state, self.spec)
        raise TypeError(f'Not an atom: {formula!r}')

    def _value(self, k: int, state, here: list[bool], after: Sequence[bool] | None) -> bool:
        kind, a, b = self._ops[k]
        match kind:
            case 'true':
                return True
            case 'atom':
                return self._atom(self.closure[k], state)
            case 'not':
                return not here[a]
            case 'and':
                return here[a] and here[b]
            case 'or':
                return here[a] or here[b]
            case 'implies':
                return not here[a] or here[b]
            case 'next':
                return after is not None and after[a]
            case 'until':
                return here[b] or (here[a] and after is not None and after[k])
            case 'eventually':
                return here[a] or (after is not None and after[k])
            case _:
                return here[a] and (after is None or after[k])

    def step(self, state, after: tuple[bool, ...] | None) -> tuple[bool, ...]:
        """
        Truth values at a state given the values at the position that follows it.

        ``after`` is ``None`` for the last state of a finite path.
        """
        here = [False] * len(self.closure)
        for k in range(len(self.closure)):
            here[k] = self._value(k, state, here, after)
        return tuple(here)

    def table(self, path: Path) -> list[tuple[bool, ...]]:
        """
        Truth values of the whole closure at every position of a path.

        Each subformula is solved over all positions before its parents; the
        operators ``U`` and ``F`` start from false and ``G`` from true, so a lasso
        gets the least and greatest fixpoints respectively.
        """
        states = path.positions
        n = len(states)
        successor = [path.successor(i) for i in range(n)]
        rows = [[False] * len(self.closure) for _ in range(n)]

        for k, (kind, _, _) in enumerate(self._ops):
            if kind == 'always':
                for row in rows:
                    row[k] = True
            changed = True
            while changed:
                changed = False
                for i in reversed(range(n)):
                    j = successor[i]
                    value = self._value(k, states[i], rows[i], None if j is None else rows[j])
                    if value != rows[i][k]:
                        rows[i][k] = value
                        changed = True
                if kind not in _TEMPORAL or isinstance(path, FinitePath):
                    break

        return [tuple(row) for row in rows]

    def holds(self, path: Path, formula: LtlFormula) -> bool:
        return self.table(path)[0][self.index[formula]]


def eval_ltl(path: Path, formula: LtlFormula, spec: Spec | None = None) -> bool:
    """
    Whether a path satisfies a formula at its first position.

    Parameters
    ----------
    path
        Finite path or lasso, over midway states or derivations
    formula
        Formula to evaluate
    spec
        Specification, needed for enabledness atoms

    Raises
    ------
    AtomLevelMismatch
        If an abstract-transition atom is read at a midway state

    Examples
    --------
    >>> from abc_justness.syntax.terms import Agent, Handshake
    >>> from abc_justness.logic.ltl import parse_ltl
    >>> a = Agent('A')
    >>> eval_ltl(Lasso((), (a, Mid(a, Handshake('c'), a))), parse_ltl('GF <c>'))
    True
    """
    if isinstance(path, Lasso | FinitePath):
        return Evaluator([formula], spec).holds(path, formula)
    raise TypeError(f'Not a path: {path!r}')
