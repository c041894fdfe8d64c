"""
Abstract transitions: classes of derivations that differ only in the state of idle
parallel components, in choice and recursion wrappers, and in receivers of a broadcast.
"""

from dataclasses import dataclass
from typing import TypeAlias

from abc_justness.sos.derivations import (
    Derivation,
    ParL,
    ParR,
    PrefixD,
    RecD,
    RelD,
    ResD,
    SumL,
    SumR,
    Sync,
    is_derivation,
)
from abc_justness.sos.rules import step_original
from abc_justness.syntax.printer import ATOM, show
from abc_justness.syntax.terms import (
    TAU,
    Action,
    Discard,
    Handshake,
    Label,
    Process,
    Relabelling,
    Spec,
    apply_relabelling,
    is_receive,
    is_send,
)
from abc_justness.utils import dedupe

from .relation import concurrent_oneway


class NoAbstractTransition(ValueError):
    """Exception raised for receive and discard derivations, which have no abstract form"""

    def __init__(self, derivation: Derivation):
        super().__init__(f'Derivation with label {derivation.label} has no abstract transition')
        self.derivation: Derivation = derivation


@dataclass(frozen=True)
class APrefix:
    action: Action
    body: Process

    @property
    def label(self) -> Label:
        return self.action


@dataclass(frozen=True)
class AParL:
    inner: 'AbstractTransition'

    @property
    def label(self) -> Label:
        return self.inner.label


@dataclass(frozen=True)
class AParR:
    inner: 'AbstractTransition'

    @property
    def label(self) -> Label:
        return self.inner.label


@dataclass(frozen=True)
class ASync:
    left: 'AbstractTransition'
    right: 'AbstractTransition'

    @property
    def label(self) -> Label:
        return TAU


@dataclass(frozen=True)
class ARes:
    inner: 'AbstractTransition'
    name: str

    @property
    def label(self) -> Label:
        return self.inner.label


@dataclass(frozen=True)
class ARel:
    inner: 'AbstractTransition'
    f: Relabelling

    @property
    def label(self) -> Label:
        return apply_relabelling(self.f, self.inner.label)


AbstractTransition: TypeAlias = APrefix | AParL | AParR | ASync | ARes | ARel


def has_abstract_transition(d: Derivation) -> bool:
    return not (is_receive(d.label) or isinstance(d.label, Discard))


def abstract_of(chi: Derivation) -> AbstractTransition:
    """
    Canonical abstract transition of a derivation.

    Choice and recursion wrappers are erased; a component moving alone and a
    broadcast send heard by the other component both become a hole on the idle side.

    Raises
    ------
    NoAbstractTransition
        If ``chi`` is labelled with a receive or a discard

    Examples
    --------
    >>> from abc_justness.syntax.terms import NIL, Prefix
    >>> c = Handshake('c')
    >>> abstract_of(ParL(PrefixD(c, NIL), Prefix(Handshake('d'), NIL))) == abstract_of(ParL(PrefixD(c, NIL), NIL))
    True
    """
    if not has_abstract_transition(chi):
        raise NoAbstractTransition(chi)
    return _canonical(chi)


def _canonical(chi: Derivation) -> AbstractTransition:
    match chi:
        case PrefixD(action, body):
            return APrefix(action, body)
        case SumL(d, _) | SumR(_, d) | RecD(_, d):
            return _canonical(d)
        case ParL(d, _):
            return AParL(_canonical(d))
        case ParR(_, d):
            return AParR(_canonical(d))
        case Sync(left, _) if is_send(left.label):
            return AParL(_canonical(left))
        case Sync(_, right) if is_send(right.label):
            return AParR(_canonical(right))
        case Sync(left, right) if isinstance(left.label, Handshake):
            return ASync(_canonical(left), _canonical(right))
        case ResD(d, name):
            return ARes(_canonical(d), name)
        case RelD(d, f):
            return ARel(_canonical(d), f)
    raise NoAbstractTransition(chi)


def equiv(chi: Derivation, zeta: Derivation) -> bool:
    """Whether two derivations belong to the same abstract transition."""
    return abstract_of(chi) == abstract_of(zeta)


def _wrapped(nu: AbstractTransition) -> str:
    return f'({render_abstract(nu)})'


def render_abstract(nu: AbstractTransition) -> str:
    """
    Textual name of an abstract transition, with ``_`` for an idle component.

    Examples
    --------
    >>> from abc_justness.syntax.terms import NIL, Broadcast
    >>> render_abstract(AParL(APrefix(Broadcast('b', '!'), NIL)))
    '(<b!>0)|_'
    """
    match nu:
        case APrefix(action, body):
            return f'<{action}>{show(body, ATOM)}'
        case AParL(inner):
            return f'{_wrapped(inner)}|_'
        case AParR(inner):
            return f'_|{_wrapped(inner)}'
        case ASync(left, right):
            return f'{_wrapped(left)}|{_wrapped(right)}'
        case ARes(inner, name):
            return f'{_wrapped(inner)}\\{name}'
        case ARel(inner, f):
            return f'{_wrapped(inner)}{f}'
    raise TypeError(f'Not an abstract transition: {nu!r}')


def representatives(nu: AbstractTransition, process: Process, spec: Spec) -> list[Derivation]:
    """Derivations from ``process`` that belong to ``nu``."""
    return [
        d
        for d in step_original(process, spec)
        if has_abstract_transition(d) and _canonical(d) == nu
    ]


def candidate_abstract_transitions(process: Process, spec: Spec) -> list[AbstractTransition]:
    """Abstract transitions with a representative at ``process``, in derivation order."""
    derivations = step_original(process, spec)
    return dedupe(_canonical(d) for d in derivations if has_abstract_transition(d))


def enabled(nu: AbstractTransition, state: Process | Derivation, spec: Spec) -> bool:
    """
    Whether ``nu`` is enabled in a process or during a derivation.

    In a process it is enabled iff it has a representative there. During a
    derivation ``zeta`` it is enabled iff some representative at ``src(zeta)`` is
    concurrent with ``zeta`` in the one-way sense.

    Examples
    --------
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('agent C = c.C\\ninit C | b!.0')
    >>> b_step, c_step = sorted(step_original(spec.init, spec), key=lambda d: str(d.label))
    >>> enabled(abstract_of(b_step), c_step, spec)
    True
    """
    if is_derivation(state):
        chis = representatives(nu, state.src, spec)
        return any(concurrent_oneway(chi, state) for chi in chis)
    return bool(representatives(nu, state, spec))


def occurs(nu: AbstractTransition, state: Process | Derivation) -> bool:
    """Whether ``state`` is a derivation of ``nu``."""
    return is_derivation(state) and has_abstract_transition(state) and _canonical(state) == nu
