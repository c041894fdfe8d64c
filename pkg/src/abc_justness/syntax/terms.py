from collections.abc import Mapping
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Literal, TypeAlias

from .errors import NotAHandshake, UndeclaredName

BroadcastKind: TypeAlias = Literal['!', '?']


@dataclass(frozen=True)
class Tau:
    """The internal action"""

    def __str__(self) -> str:
        return 'tau'


TAU = Tau()


@dataclass(frozen=True)
class Handshake:
    """A handshake action: name ``c`` or co-name ``'c``"""

    name: str
    barred: bool = False

    def __str__(self) -> str:
        return f"'{self.name}" if self.barred else self.name


@dataclass(frozen=True)
class Broadcast:
    """A broadcast send ``b!`` or receive ``b?``"""

    name: str
    kind: BroadcastKind

    def __str__(self) -> str:
        return f'{self.name}{self.kind}'


@dataclass(frozen=True)
class Discard:
    """The discard pseudo-label ``b:`` of the discard semantics"""

    name: str

    def __str__(self) -> str:
        return f'{self.name}:'


Action: TypeAlias = Tau | Handshake | Broadcast
Label: TypeAlias = Tau | Handshake | Broadcast | Discard


def is_send(label: Label) -> bool:
    return isinstance(label, Broadcast) and label.kind == '!'


def is_receive(label: Label) -> bool:
    return isinstance(label, Broadcast) and label.kind == '?'


def complement(action: Action) -> Handshake:
    """
    Complement of a handshake action.

    Parameters
    ----------
    action
        Handshake action ``c`` or ``'c``

    Returns
    -------
    Handshake
        The same name with the bar flipped

    Raises
    ------
    NotAHandshake
        If ``action`` is ``tau`` or a broadcast

    Examples
    --------
    >>> complement(Handshake('c'))
    Handshake(name='c', barred=True)
    """
    if not isinstance(action, Handshake):
        raise NotAHandshake(action)
    return Handshake(action.name, not action.barred)


def parse_label(text: str) -> Label:
    """Read a label written as ``tau``, ``c``, ``'c``, ``b!``, ``b?`` or ``b:``."""
    text = text.strip()
    if text == 'tau':
        return TAU
    if text.endswith(('!', '?')):
        return Broadcast(text[:-1], '!' if text.endswith('!') else '?')
    if text.endswith(':'):
        return Discard(text[:-1])
    if text.startswith("'"):
        return Handshake(text[1:], barred=True)
    return Handshake(text)


@dataclass(frozen=True)
class Relabelling:
    """
    Kind-preserving renaming of broadcast and handshake names.

    Both maps are stored as sorted ``(source, target)`` pairs so that relabellings are
    hashable and compare structurally. Names outside the domain are left unchanged.
    """

    broadcast_map: tuple[tuple[str, str], ...] = ()
    handshake_map: tuple[tuple[str, str], ...] = ()

    @staticmethod
    def from_maps(
        broadcast_map: Mapping[str, str] | None = None,
        handshake_map: Mapping[str, str] | None = None,
    ) -> 'Relabelling':
        return Relabelling(
            broadcast_map=tuple(sorted((broadcast_map or {}).items())),
            handshake_map=tuple(sorted((handshake_map or {}).items())),
        )

    @cached_property
    def _broadcasts(self) -> dict[str, str]:
        return dict(self.broadcast_map)

    @cached_property
    def _handshakes(self) -> dict[str, str]:
        return dict(self.handshake_map)

    def rename_broadcast(self, name: str) -> str:
        return self._broadcasts.get(name, name)

    def rename_handshake(self, name: str) -> str:
        return self._handshakes.get(name, name)

    def __str__(self) -> str:
        pairs = [*self.broadcast_map, *self.handshake_map]
        return '[' + ','.join(f'{target}/{source}' for source, target in pairs) + ']'


def apply_relabelling(f: Relabelling, label: Label) -> Label:
    """
    Extend a relabelling from names to labels.

    Examples
    --------
    >>> f = Relabelling.from_maps(broadcast_map={'b1': 'b2'})
    >>> str(apply_relabelling(f, Broadcast('b1', '!')))
    'b2!'
    """
    match label:
        case Handshake(name, barred):
            return Handshake(f.rename_handshake(name), barred)
        case Broadcast(name, kind):
            return Broadcast(f.rename_broadcast(name), kind)
        case Discard(name):
            return Discard(f.rename_broadcast(name))
        case _:
            return label


@dataclass(frozen=True)
class Nil:
    """Inaction ``0``"""


NIL = Nil()


@dataclass(frozen=True)
class Prefix:
    action: Action
    body: 'Process'


@dataclass(frozen=True)
class Choice:
    left: 'Process'
    right: 'Process'


@dataclass(frozen=True)
class Par:
    left: 'Process'
    right: 'Process'


@dataclass(frozen=True)
class Restrict:
    body: 'Process'
    name: str


@dataclass(frozen=True)
class Relabel:
    body: 'Process'
    f: Relabelling


@dataclass(frozen=True)
class Agent:
    name: str


Process: TypeAlias = Nil | Prefix | Choice | Par | Restrict | Relabel | Agent


def is_process(value: object) -> bool:
    return isinstance(value, Nil | Prefix | Choice | Par | Restrict | Relabel | Agent)


@dataclass(frozen=True)
class Spec:
    """
    An ABC specification: finite alphabets, defining equations and an initial process.

    Parameters
    ----------
    broadcast_names
        The broadcast namespace B
    handshake_names
        The handshake namespace C
    env
        Defining equations, agent identifier to body
    init
        The initial process expression
    """

    broadcast_names: frozenset[str]
    handshake_names: frozenset[str]
    env: Mapping[str, Process]
    init: Process

    def __hash__(self) -> int:
        return self._digest

    @cached_property
    def _digest(self) -> int:
        equations = tuple(sorted(self.env.items(), key=lambda item: item[0]))
        return hash((self.broadcast_names, self.handshake_names, equations, self.init))

    def body(self, agent: str) -> Process:
        try:
            return self.env[agent]
        except KeyError as e:
            raise UndeclaredName(agent, 'agent') from e

    @cached_property
    def handshake_actions(self) -> frozenset[Handshake]:
        """The finite handshake action set H of this specification."""
        return frozenset(
            Handshake(name, barred) for name in self.handshake_names for barred in (False, True)
        )

    def with_init(self, init: Process) -> 'Spec':
        return replace(self, init=init)


def sort(process: Process, spec: Spec) -> tuple[frozenset[str], frozenset[str]]:
    """
    Broadcast and handshake names syntactically reachable from a process.

    The walk follows agent identifiers into their defining bodies and includes the
    target names of relabellings.

    Parameters
    ----------
    process
        Process expression closed over ``spec``
    spec
        Specification supplying the defining equations

    Returns
    -------
    tuple[frozenset[str], frozenset[str]]
        Broadcast names and handshake names
    """
    broadcasts: set[str] = set()
    handshakes: set[str] = set()
    unfolded: set[str] = set()
    pending: list[Process] = [process]
    while pending:
        match pending.pop():
            case Prefix(Broadcast(name, _), body):
                broadcasts.add(name)
                pending.append(body)
            case Prefix(Handshake(name, _), body):
                handshakes.add(name)
                pending.append(body)
            case Prefix(_, body) | Restrict(body, _):
                pending.append(body)
            case Choice(left, right) | Par(left, right):
                pending.extend((right, left))
            case Relabel(body, f):
                broadcasts.update(target for _, target in f.broadcast_map)
                handshakes.update(target for _, target in f.handshake_map)
                pending.append(body)
            case Agent(name) if name not in unfolded:
                unfolded.add(name)
                pending.append(spec.body(name))
            case _:
                pass
    return frozenset(broadcasts), frozenset(handshakes)
