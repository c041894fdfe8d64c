"""
Enumeration of the paths of a reachable graph over midway states.

Transitions are the distinct ``(source, label, target)`` triples of the graph, so a
triple with several derivations is enumerated once.
"""

import logging
from collections.abc import Iterator

from abc_justness.paths.states import FinitePath, Lasso, Mid
from abc_justness.sos.lts import DEFAULT_MAX_STATES, LtsGraph, reachable
from abc_justness.syntax.terms import Label, Spec
from abc_justness.utils import dedupe

logger = logging.getLogger(__name__)

Move = tuple[Label, int]


def moves(graph: LtsGraph) -> list[list[Move]]:
    """Distinct ``(label, target)`` moves of every state, in edge order."""
    return [dedupe((edge.label, edge.target) for edge in edges) for edges in graph.outgoing]


def predecessors(graph: LtsGraph) -> list[list[tuple[int, Label]]]:
    """Distinct ``(source, label)`` pairs entering every state."""
    entering: list[list[tuple[int, Label]]] = [[] for _ in graph.states]
    for src, out in enumerate(moves(graph)):
        for label, target in out:
            entering[target].append((src, label))
    return entering


def distances(graph: LtsGraph) -> list[int | None]:
    """Fewest transitions from the initial state to every state."""
    out = moves(graph)
    dist: list[int | None] = [None] * len(graph.states)
    dist[graph.initial] = 0
    frontier = [graph.initial]
    while frontier:
        following = []
        for u in frontier:
            for _, v in out[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1  # type: ignore[operator]
                    following.append(v)
        frontier = following
    return dist


def chain(graph: LtsGraph, start: int, steps: list[Move]) -> tuple:
    """States of the path leaving ``start`` through ``steps``."""
    states: list = [graph.states[start]]
    current = start
    for label, target in steps:
        states.append(Mid(graph.states[current], label, graph.states[target]))
        states.append(graph.states[target])
        current = target
    return tuple(states)


def finite_paths(graph: LtsGraph, maxlen: int) -> Iterator[FinitePath]:
    """Finite paths from the initial state with at most ``maxlen`` transitions, depth first."""
    out = moves(graph)
    states = graph.states

    def extend(prefix: tuple, current: int, budget: int) -> Iterator[FinitePath]:
        yield FinitePath(prefix)
        if budget == 0:
            return
        for label, target in out[current]:
            following = (*prefix, Mid(states[current], label, states[target]), states[target])
            yield from extend(following, target, budget - 1)

    yield from extend((states[graph.initial],), graph.initial, maxlen)


def enumerate_finite_paths(
    spec: Spec, maxlen: int, max_states: int = DEFAULT_MAX_STATES
) -> Iterator[FinitePath]:
    """
    All finite paths of the initial process with at most ``maxlen`` transitions.

    Parameters
    ----------
    spec
        Specification whose initial process is explored
    maxlen
        Largest number of transitions
    max_states
        Exploration bound

    Raises
    ------
    StateBoundExceeded
        If the reachable graph has more than ``max_states`` states

    Examples
    --------
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('init b1!.b2!.0')
    >>> [len(path.states) for path in enumerate_finite_paths(spec, 1)]
    [1, 3]
    """
    if maxlen < 0:
        raise ValueError('maxlen must not be negative')
    yield from finite_paths(reachable(spec.init, spec, max_states), maxlen)


def lassos(graph: LtsGraph, stem_bound: int, cycle_bound: int) -> Iterator[Lasso]:
    """
    Lassos whose stem and cycle together visit every state at most once.

    A simple path from the initial state followed by a transition back to one of its
    states closes a cycle; stems and cycles are bounded in transitions. Each infinite
    path is produced once, already normalized.
    """
    out = moves(graph)
    count = 0

    def extend(path: list[int], steps: list[Move]) -> Iterator[Lasso]:
        nonlocal count
        current = path[-1]
        for label, target in out[current]:
            if target in path:
                p = path.index(target)
                if p <= stem_bound and len(steps) + 1 - p <= cycle_bound:
                    states = chain(graph, path[0], [*steps, (label, target)])
                    count += 1
                    yield Lasso(states[: 2 * p], states[2 * p : -1])
            elif len(steps) + 1 < stem_bound + cycle_bound:
                yield from extend([*path, target], [*steps, (label, target)])

    yield from extend([graph.initial], [])
    logger.info(
        'Enumerated %d lassos with stem <= %d and cycle <= %d', count, stem_bound, cycle_bound
    )


def enumerate_lassos(
    spec: Spec, stem_bound: int, cycle_bound: int, max_states: int = DEFAULT_MAX_STATES
) -> Iterator[Lasso]:
    """Simple lassos of the initial process within the given bounds."""
    yield from lassos(reachable(spec.init, spec, max_states), stem_bound, cycle_bound)


def simple_cycles(graph: LtsGraph, cycle_bound: int) -> Iterator[tuple[int, list[Move]]]:
    """
    Every simple cycle of at most ``cycle_bound`` transitions, once each.

    A cycle is reported from its smallest state together with its moves.
    """
    out = moves(graph)

    def extend(
        root: int, path: list[int], steps: list[Move]
    ) -> Iterator[tuple[int, list[Move]]]:
        for label, target in out[path[-1]]:
            if target == root:
                yield root, [*steps, (label, target)]
            elif target > root and target not in path and len(steps) + 1 < cycle_bound:
                yield from extend(root, [*path, target], [*steps, (label, target)])

    for root in range(len(graph.states)):
        yield from extend(root, [root], [])
