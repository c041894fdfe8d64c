from dataclasses import dataclass
from typing import Generic, TypeAlias, TypeVar

from abc_justness.sos.derivations import Derivation, is_derivation, render
from abc_justness.syntax.printer import pretty_print
from abc_justness.syntax.terms import Label, Process, is_process


class MalformedPath(ValueError):
    """Exception raised when a sequence of states is not a path"""

    def __init__(self, reason: str):
        super().__init__(f'Malformed path: {reason}')
        self.reason: str = reason


@dataclass(frozen=True)
class Mid:
    """Midway state of a transition ``src --label--> target``"""

    src: Process
    label: Label
    target: Process

    def __str__(self) -> str:
        return f'-{self.label}->'


UState: TypeAlias = Process | Derivation
SState: TypeAlias = Process | Mid

S = TypeVar('S')


def _check_adjacent(before: object, after: object):
    if is_process(before):
        if is_process(after):
            raise MalformedPath(f'two consecutive processes {pretty_print(before)}')
        if after.src != before:  # type: ignore[union-attr]
            raise MalformedPath(
                f'transition {render_state(after)} does not leave {pretty_print(before)}'
            )
    else:
        if not is_process(after):
            raise MalformedPath(f'two consecutive transitions {render_state(before)}')
        if before.target != after:  # type: ignore[union-attr]
            raise MalformedPath(
                f'transition {render_state(before)} does not reach {pretty_print(after)}'
            )


@dataclass(frozen=True)
class FinitePath(Generic[S]):
    """Finite path: processes and transitions alternate, the last state is a process."""

    states: tuple[S, ...]

    def __post_init__(self):
        if not self.states:
            raise MalformedPath('a path has at least one state')
        if not is_process(self.states[-1]):
            raise MalformedPath('a finite path ends in a process')
        for before, after in zip(self.states, self.states[1:]):
            _check_adjacent(before, after)

    @property
    def last(self) -> Process:
        return self.states[-1]  # type: ignore[return-value]

    @property
    def positions(self) -> tuple[S, ...]:
        return self.states

    def successor(self, i: int) -> int | None:
        return i + 1 if i + 1 < len(self.states) else None

    def normalized(self) -> 'FinitePath[S]':
        return self


@dataclass(frozen=True)
class Lasso(Generic[S]):
    """
    Ultimately periodic infinite path ``stem · cycle^ω``.

    Parameters
    ----------
    stem
        States visited once, possibly empty
    cycle
        States repeated forever; nonempty with as many processes as transitions
    """

    stem: tuple[S, ...]
    cycle: tuple[S, ...]

    def __post_init__(self):
        if not self.cycle:
            raise MalformedPath('the cycle of a lasso is nonempty')
        if len(self.cycle) % 2:
            raise MalformedPath('the cycle of a lasso alternates processes and transitions')
        sequence = (*self.stem, *self.cycle, self.cycle[0])
        for before, after in zip(sequence, sequence[1:]):
            _check_adjacent(before, after)

    @property
    def positions(self) -> tuple[S, ...]:
        return (*self.stem, *self.cycle)

    def successor(self, i: int) -> int:
        return i + 1 if i + 1 < len(self.stem) + len(self.cycle) else len(self.stem)

    def normalized(self) -> 'Lasso[S]':
        """
        Canonical presentation of the same infinite path.

        The cycle is cut down to its primitive root and the stem is rolled back into
        the cycle as far as possible.
        """
        cycle = self.cycle
        n = len(cycle)
        for period in range(2, n + 1, 2):
            if n % period == 0 and cycle == cycle[:period] * (n // period):
                cycle = cycle[:period]
                break

        stem = self.stem
        while stem and stem[-1] == cycle[-1]:
            cycle = (stem[-1], *cycle[:-1])
            stem = stem[:-1]
        return Lasso(stem, cycle)


Path: TypeAlias = FinitePath | Lasso


def rotate(cycle: tuple, j: int) -> tuple:
    return (*cycle[j:], *cycle[:j])


def suffix_classes(path: Path) -> list[Path]:
    """
    Every distinct suffix of a path, one presentation each.

    For a lasso these are the suffixes starting in the stem followed by all rotations
    of the cycle; their number is the length of the stem plus the length of the cycle.
    """
    match path:
        case FinitePath(states):
            return [FinitePath(states[i:]) for i in range(len(states))]
        case Lasso(stem, cycle):
            return [Lasso(stem[i:], cycle) for i in range(len(stem))] + [
                Lasso((), rotate(cycle, j)) for j in range(len(cycle))
            ]
    raise TypeError(f'Not a path: {path!r}')


def hat_state(state: UState) -> SState:
    if is_derivation(state):
        return Mid(state.src, state.label, state.target)  # type: ignore[union-attr]
    return state  # type: ignore[return-value]


def hat(path: Path) -> Path:
    """Project a path of derivation states onto midway states, state by state."""
    match path:
        case FinitePath(states):
            return FinitePath(tuple(map(hat_state, states)))
        case Lasso(stem, cycle):
            return Lasso(tuple(map(hat_state, stem)), tuple(map(hat_state, cycle)))
    raise TypeError(f'Not a path: {path!r}')


def first_process(path: Path) -> Process:
    for state in path.positions:
        if is_process(state):
            return state  # type: ignore[return-value]
    raise MalformedPath('path has no process state')


def render_state(state: object) -> str:
    if is_process(state):
        return pretty_print(state)  # type: ignore[arg-type]
    if isinstance(state, Mid):
        return str(state)
    return f'-[{render(state)}]->'  # type: ignore[arg-type]


def render_path(path: Path) -> str:
    """
    One-line rendering; the repeated part of a lasso is written ``( ... )^w``.

    Examples
    --------
    >>> from abc_justness.syntax.terms import Agent, Handshake
    >>> a = Agent('A')
    >>> render_path(Lasso((), (a, Mid(a, Handshake('c'), a))))
    '( A -c-> )^w'
    """
    match path:
        case FinitePath(states):
            return ' '.join(map(render_state, states))
        case Lasso(stem, cycle):
            cycle_text = '( ' + ' '.join(map(render_state, cycle)) + ' )^w'
            return ' '.join([*map(render_state, stem), cycle_text])
    raise TypeError(f'Not a path: {path!r}')


def path_to_dict(path: Path) -> dict:
    match path:
        case FinitePath(states):
            return {
                'kind': 'finite',
                'states': list(map(render_state, states)),
                'text': render_path(path),
            }
        case Lasso(stem, cycle):
            return {
                'kind': 'lasso',
                'stem': list(map(render_state, stem)),
                'cycle': list(map(render_state, cycle)),
                'text': render_path(path),
            }
    raise TypeError(f'Not a path: {path!r}')


def transitions(path: Path) -> list:
    """Transition states of a path in order; a lasso contributes stem and one cycle round."""
    return [state for state in path.positions if not is_process(state)]
