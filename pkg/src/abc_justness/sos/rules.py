import logging
from collections import OrderedDict
from collections.abc import Callable, Iterator

from abc_justness.syntax.errors import UnguardedRecursion
from abc_justness.syntax.terms import (
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
    Spec,
    Tau,
)
from abc_justness.utils import dedupe

from .derivations import (
    Derivation,
    Dis0,
    Dis1,
    Dis2,
    DisRel,
    ParL,
    ParR,
    PrefixD,
    RecD,
    RelD,
    ResD,
    SumL,
    SumR,
    Sync,
    compose,
    render,
)

logger = logging.getLogger(__name__)


def is_discard(d: Derivation) -> bool:
    return isinstance(d.label, Discard)


def _moves_alone(label: Label) -> bool:
    return isinstance(label, Tau | Handshake)


class Stepper:
    """
    Derivation generator for the processes of one specification.

    Both semantics are memoised per process term. The original semantics decides
    the negative premise of the broadcast rules by searching the derivations of the
    idle component; the discard semantics replaces that premise by explicit
    discard derivations.

    Parameters
    ----------
    spec
        Specification supplying the defining equations and the broadcast alphabet
    """

    def __init__(self, spec: Spec):
        self.spec: Spec = spec
        self.broadcast_names: tuple[str, ...] = tuple(sorted(spec.broadcast_names))
        self._original: dict[Process, tuple[Derivation, ...]] = {}
        self._discard: dict[Process, tuple[Derivation, ...]] = {}
        self._unfolding: set[tuple[str, str]] = set()

    def original(self, process: Process) -> tuple[Derivation, ...]:
        return self._memoised(process, self._original, self._derive_original, 'original')

    def discard(self, process: Process) -> tuple[Derivation, ...]:
        return self._memoised(process, self._discard, self._derive_discard, 'discard')

    def admits(self, process: Process, label: Label) -> bool:
        if isinstance(label, Discard):
            derivations = self.discard(process)
        else:
            derivations = self.original(process)
        return any(d.label == label for d in derivations)

    def _memoised(
        self,
        process: Process,
        memo: dict[Process, tuple[Derivation, ...]],
        derive: Callable[[Process], Iterator[Derivation]],
        semantics: str,
    ) -> tuple[Derivation, ...]:
        if process in memo:
            return memo[process]

        guard = None
        if isinstance(process, Agent):
            guard = (semantics, process.name)
            if guard in self._unfolding:
                raise UnguardedRecursion(process.name)
            self._unfolding.add(guard)
        try:
            derivations = tuple(sorted(dedupe(derive(process)), key=render))
        finally:
            if guard is not None:
                self._unfolding.discard(guard)

        memo[process] = derivations
        return derivations

    def _derive_original(self, process: Process) -> Iterator[Derivation]:
        match process:
            case Nil():
                return
            case Prefix(action, body):
                yield PrefixD(action, body)
            case Choice(left, right):
                yield from (SumL(d, right) for d in self.original(left))
                yield from (SumR(left, d) for d in self.original(right))
            case Par(left, right):
                left_moves, right_moves = self.original(left), self.original(right)
                for d in left_moves:
                    if _moves_alone(d.label) or self._ignores(right, d.label):
                        yield ParL(d, right)
                for d in right_moves:
                    if _moves_alone(d.label) or self._ignores(left, d.label):
                        yield ParR(left, d)
                yield from self._synchronisations(left_moves, right_moves)
            case Restrict(body, name):
                for d in self.original(body):
                    if not (isinstance(d.label, Handshake) and d.label.name == name):
                        yield ResD(d, name)
            case Relabel(body, f):
                yield from (RelD(d, f) for d in self.original(body))
            case Agent(name):
                yield from (RecD(name, d) for d in self.original(self.spec.body(name)))

    def _ignores(self, process: Process, label: Label) -> bool:
        # The idle side must be unable to receive the broadcast.
        assert isinstance(label, Broadcast)
        return not self.admits(process, Broadcast(label.name, '?'))

    def _derive_discard(self, process: Process) -> Iterator[Derivation]:
        match process:
            case Nil():
                yield from (Dis0(name) for name in self.broadcast_names)
            case Prefix(action, body):
                yield PrefixD(action, body)
                for name in self.broadcast_names:
                    if action != Broadcast(name, '?'):
                        yield Dis1(action, body, name)
            case Choice(left, right):
                left_moves, right_moves = self.discard(left), self.discard(right)
                yield from (SumL(d, right) for d in left_moves if not is_discard(d))
                yield from (SumR(left, d) for d in right_moves if not is_discard(d))
                for d in left_moves:
                    if is_discard(d):
                        yield from (Dis2(d, e) for e in right_moves if e.label == d.label)
            case Par(left, right):
                left_moves, right_moves = self.discard(left), self.discard(right)
                yield from (ParL(d, right) for d in left_moves if _moves_alone(d.label))
                yield from (ParR(left, d) for d in right_moves if _moves_alone(d.label))
                yield from self._synchronisations(left_moves, right_moves)
            case Restrict(body, name):
                for d in self.discard(body):
                    if not (isinstance(d.label, Handshake) and d.label.name == name):
                        yield ResD(d, name)
            case Relabel(body, f):
                moves = [RelD(d, f) for d in self.discard(body)]
                yield from (d for d in moves if not is_discard(d))
                yield from self._relabelled_discards(body, f, moves)
            case Agent(name):
                yield from (RecD(name, d) for d in self.discard(self.spec.body(name)))

    def _relabelled_discards(
        self, body: Process, f: Relabelling, moves: list[RelD]
    ) -> Iterator[Derivation]:
        # P[f] discards b exactly when no preimage of b is received.
        for name in self.broadcast_names:
            if any(d.label == Broadcast(name, '?') for d in moves):
                continue
            renamed = (d for d in moves if d.label == Discard(name))
            yield next(renamed, None) or DisRel(body, f, name)

    @staticmethod
    def _synchronisations(
        left_moves: tuple[Derivation, ...], right_moves: tuple[Derivation, ...]
    ) -> Iterator[Derivation]:
        for d in left_moves:
            for e in right_moves:
                if compose(d.label, e.label) is not None:
                    yield Sync(d, e)


_steppers: OrderedDict[Spec, Stepper] = OrderedDict()


def stepper_for(spec: Spec) -> Stepper:
    """Shared memoising stepper of a specification; the 32 most recent are kept."""
    if spec in _steppers:
        _steppers.move_to_end(spec)
        return _steppers[spec]

    stepper = Stepper(spec)
    _steppers[spec] = stepper
    if len(_steppers) > 32:
        _ = _steppers.popitem(last=False)
    return stepper


def step_original(process: Process, spec: Spec) -> tuple[Derivation, ...]:
    """
    Derivations of the original semantics, with negative premises.

    Parameters
    ----------
    process
        Process closed over ``spec``
    spec
        Specification with guarded defining equations

    Returns
    -------
    tuple[Derivation, ...]
        Every derivation with source ``process`` and an action label, ordered by
        rendered name

    Raises
    ------
    UnguardedRecursion
        If unfolding an agent identifier reaches the identifier again without a prefix
    """
    return stepper_for(spec).original(process)


def step_discard(process: Process, spec: Spec) -> tuple[Derivation, ...]:
    """Derivations of the discard semantics, over actions and discard labels."""
    return stepper_for(spec).discard(process)


def admits(process: Process, label: Label, spec: Spec) -> bool:
    """Whether some derivation from ``process`` carries ``label``."""
    return stepper_for(spec).admits(process, label)


def successors(process: Process, spec: Spec) -> list[tuple[Label, Process]]:
    """Distinct transitions ``(label, target)`` of the original semantics."""
    return dedupe((d.label, d.target) for d in step_original(process, spec))
