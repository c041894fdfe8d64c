"""
Derivation terms: each value names one proof tree of the operational semantics.

Source, target and label of a derivation are computed from its shape, so two
derivations are equal exactly when they are the same proof.
"""

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import TypeAlias

from abc_justness.syntax.printer import ATOM, PAR, PREFIX, show
from abc_justness.syntax.terms import (
    TAU,
    Action,
    Agent,
    Broadcast,
    Choice,
    Discard,
    Handshake,
    Label,
    Nil,
    Par,
    Prefix,
    Process,
    Relabel,
    Relabelling,
    Restrict,
    apply_relabelling,
)

# Composition of broadcast marks in a synchronisation; '!' with '!' is undefined.
_BROADCAST_COMPOSITION = {
    ('!', '?'): '!',
    ('?', '!'): '!',
    ('?', '?'): '?',
    (':', '!'): '!',
    ('!', ':'): '!',
    (':', '?'): '?',
    ('?', ':'): '?',
    (':', ':'): ':',
}


def _broadcast_mark(label: Label) -> tuple[str, str] | None:
    match label:
        case Broadcast(name, kind):
            return name, kind
        case Discard(name):
            return name, ':'
        case _:
            return None


def compose(left: Label, right: Label) -> Label | None:
    """
    Label of a synchronisation of two labels, or ``None`` if they do not synchronise.

    Examples
    --------
    >>> compose(Broadcast('b', '!'), Broadcast('b', '?'))
    Broadcast(name='b', kind='!')
    >>> compose(Handshake('c'), Handshake('c', barred=True))
    Tau()
    >>> compose(Broadcast('b', '!'), Broadcast('b', '!')) is None
    True
    """
    if isinstance(left, Handshake) and isinstance(right, Handshake):
        if left.name == right.name and left.barred != right.barred:
            return TAU
        return None
    left_mark, right_mark = _broadcast_mark(left), _broadcast_mark(right)
    if left_mark is None or right_mark is None or left_mark[0] != right_mark[0]:
        return None
    mark = _BROADCAST_COMPOSITION.get((left_mark[1], right_mark[1]))
    match mark:
        case None:
            return None
        case ':':
            return Discard(left_mark[0])
        case _:
            return Broadcast(left_mark[0], mark)


@dataclass(frozen=True)
class PrefixD:
    """``α.P`` performs ``α`` and becomes ``P``"""

    action: Action
    body: Process

    @cached_property
    def src(self) -> Process:
        return Prefix(self.action, self.body)

    @cached_property
    def target(self) -> Process:
        return self.body

    @cached_property
    def label(self) -> Label:
        return self.action


@dataclass(frozen=True)
class SumL:
    d: 'Derivation'
    right: Process

    @cached_property
    def src(self) -> Process:
        return Choice(self.d.src, self.right)

    @cached_property
    def target(self) -> Process:
        return self.d.target

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class SumR:
    left: Process
    d: 'Derivation'

    @cached_property
    def src(self) -> Process:
        return Choice(self.left, self.d.src)

    @cached_property
    def target(self) -> Process:
        return self.d.target

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class ParL:
    """Left component moves alone; a broadcast only if the right side cannot receive it"""

    d: 'Derivation'
    right: Process

    @cached_property
    def src(self) -> Process:
        return Par(self.d.src, self.right)

    @cached_property
    def target(self) -> Process:
        return Par(self.d.target, self.right)

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class ParR:
    left: Process
    d: 'Derivation'

    @cached_property
    def src(self) -> Process:
        return Par(self.left, self.d.src)

    @cached_property
    def target(self) -> Process:
        return Par(self.left, self.d.target)

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class Sync:
    """Both components move together: a handshake pair or a broadcast with its receivers"""

    left: 'Derivation'
    right: 'Derivation'

    @cached_property
    def src(self) -> Process:
        return Par(self.left.src, self.right.src)

    @cached_property
    def target(self) -> Process:
        return Par(self.left.target, self.right.target)

    @cached_property
    def label(self) -> Label:
        label = compose(self.left.label, self.right.label)
        if label is None:
            raise ValueError(f'{self.left.label} and {self.right.label} do not synchronise')
        return label


@dataclass(frozen=True)
class ResD:
    d: 'Derivation'
    name: str

    @cached_property
    def src(self) -> Process:
        return Restrict(self.d.src, self.name)

    @cached_property
    def target(self) -> Process:
        return Restrict(self.d.target, self.name)

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class RelD:
    d: 'Derivation'
    f: Relabelling

    @cached_property
    def src(self) -> Process:
        return Relabel(self.d.src, self.f)

    @cached_property
    def target(self) -> Process:
        return Relabel(self.d.target, self.f)

    @cached_property
    def label(self) -> Label:
        return apply_relabelling(self.f, self.d.label)


@dataclass(frozen=True)
class RecD:
    """
    An agent identifier moves like its defining body.

    A discard of the body is a discard of the identifier itself, so the target
    stays ``A`` in that case.
    """

    agent: str
    d: 'Derivation'

    @cached_property
    def src(self) -> Process:
        return Agent(self.agent)

    @cached_property
    def target(self) -> Process:
        return self.src if isinstance(self.d.label, Discard) else self.d.target

    @cached_property
    def label(self) -> Label:
        return self.d.label


@dataclass(frozen=True)
class Dis0:
    """``0`` discards every broadcast"""

    name: str

    @cached_property
    def src(self) -> Process:
        return Nil()

    @cached_property
    def target(self) -> Process:
        return Nil()

    @cached_property
    def label(self) -> Label:
        return Discard(self.name)


@dataclass(frozen=True)
class Dis1:
    """``α.P`` discards ``b`` unless ``α`` is ``b?``"""

    action: Action
    body: Process
    name: str

    @cached_property
    def src(self) -> Process:
        return Prefix(self.action, self.body)

    @cached_property
    def target(self) -> Process:
        return self.src

    @cached_property
    def label(self) -> Label:
        return Discard(self.name)


@dataclass(frozen=True)
class Dis2:
    """A choice discards ``b`` when both alternatives do"""

    left: 'Derivation'
    right: 'Derivation'

    @cached_property
    def src(self) -> Process:
        return Choice(self.left.src, self.right.src)

    @cached_property
    def target(self) -> Process:
        return self.src

    @cached_property
    def label(self) -> Label:
        return self.left.label


@dataclass(frozen=True)
class DisRel:
    """``P[f]`` discards a name that no name of ``P`` is renamed to"""

    body: Process
    f: Relabelling
    name: str

    @cached_property
    def src(self) -> Process:
        return Relabel(self.body, self.f)

    @cached_property
    def target(self) -> Process:
        return self.src

    @cached_property
    def label(self) -> Label:
        return Discard(self.name)


Derivation: TypeAlias = (
    PrefixD | SumL | SumR | ParL | ParR | Sync | ResD | RelD | RecD | Dis0 | Dis1 | Dis2
    | DisRel
)

_DERIVATION_TYPES = (
    PrefixD, SumL, SumR, ParL, ParR, Sync, ResD, RelD, RecD, Dis0, Dis1, Dis2, DisRel
)


def is_derivation(value: object) -> bool:
    return isinstance(value, _DERIVATION_TYPES)


def _wrapped(d: Derivation) -> str:
    text = render(d)
    return text if isinstance(d, PrefixD | Dis0 | Dis1 | DisRel) else f'({text})'


@functools.lru_cache(maxsize=65536)
def render(d: Derivation) -> str:
    """
    Textual name of a derivation.

    A prefix derivation ``α.P`` is written ``<α>P``; the other constructors keep the
    shape of their source term with the moving part in place of the operand.

    Examples
    --------
    >>> from abc_justness.syntax.terms import NIL
    >>> render(Sync(PrefixD(Broadcast('b', '!'), NIL), SumL(PrefixD(Broadcast('b', '?'), NIL), Prefix(Handshake('c'), NIL))))
    '<b!>0|(<b?>0+c.0)'
    """
    match d:
        case PrefixD(action, body):
            return f'<{action}>{show(body, ATOM)}'
        case SumL(inner, right):
            return f'{_wrapped(inner)}+{show(right, PAR)}'
        case SumR(left, inner):
            return f'{show(left, PAR)}+{_wrapped(inner)}'
        case ParL(inner, right):
            return f'{_wrapped(inner)}|{show(right, PREFIX)}'
        case ParR(left, inner):
            return f'{show(left, PREFIX)}|{_wrapped(inner)}'
        case Sync(left, right):
            return f'{_wrapped(left)}|{_wrapped(right)}'
        case ResD(inner, name):
            return f'{_wrapped(inner)}\\{name}'
        case RelD(inner, f):
            return f'{_wrapped(inner)}{f}'
        case RecD(agent, inner):
            return f'{agent}:{_wrapped(inner)}'
        case Dis0(name):
            return f'<{name}:>0'
        case Dis1(action, body, name):
            return f'<{name}:>{show(Prefix(action, body), ATOM)}'
        case Dis2(left, right):
            return f'{_wrapped(left)}+{_wrapped(right)}'
        case DisRel(body, f, name):
            return f'<{name}:>{show(Relabel(body, f), ATOM)}'
    raise TypeError(f'Not a derivation: {d!r}')
