import json
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from abc_justness.syntax.printer import pretty_print
from abc_justness.syntax.terms import Label, Process, Spec
from abc_justness.templates import lts_template

from .derivations import Derivation, render
from .rules import step_original

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 100_000


class StateBoundExceeded(Exception):
    """Exception raised when exploration reaches more states than allowed"""

    def __init__(self, bound: int, frontier: list[Process]):
        sample = ', '.join(pretty_print(p) for p in frontier[:3])
        super().__init__(
            f'More than {bound} reachable states; unexplored states include {sample}'
        )
        self.bound: int = bound
        self.frontier: list[Process] = frontier


@dataclass(frozen=True)
class Edge:
    src: int
    derivation: Derivation
    label: Label
    target: int


@dataclass(frozen=True)
class LtsGraph:
    """
    Reachable part of the transition system of a process.

    States are numbered in breadth-first discovery order; ``initial`` is always 0.
    Each derivation is its own edge, so one transition triple may have several edges.
    """

    states: tuple[Process, ...]
    edges: tuple[Edge, ...]
    initial: int = 0

    @cached_property
    def index(self) -> dict[Process, int]:
        return {state: i for i, state in enumerate(self.states)}

    @cached_property
    def outgoing(self) -> tuple[tuple[Edge, ...], ...]:
        adjacency: list[list[Edge]] = [[] for _ in self.states]
        for edge in self.edges:
            adjacency[edge.src].append(edge)
        return tuple(map(tuple, adjacency))

    def to_dot(self) -> str:
        return lts_template.render(
            initial=self.initial,
            states=[pretty_print(state) for state in self.states],
            edges=[
                {
                    'src': edge.src,
                    'target': edge.target,
                    'label': str(edge.label),
                    'derivation': render(edge.derivation),
                }
                for edge in self.edges
            ],
        )

    def to_dict(self) -> dict:
        return {
            'states': [pretty_print(state) for state in self.states],
            'edges': [
                {
                    'src': edge.src,
                    'label': str(edge.label),
                    'tgt': edge.target,
                    'derivation': render(edge.derivation),
                }
                for edge in self.edges
            ],
            'init': self.initial,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def reachable(init: Process, spec: Spec, max_states: int = DEFAULT_MAX_STATES) -> LtsGraph:
    """
    Explore the states reachable from ``init`` under the original semantics.

    Parameters
    ----------
    init
        Initial process
    spec
        Specification supplying the defining equations
    max_states
        Largest number of states to discover

    Returns
    -------
    LtsGraph
        States in breadth-first discovery order with one edge per derivation

    Raises
    ------
    StateBoundExceeded
        If more than ``max_states`` states are reachable

    Examples
    --------
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('init b1!.b2!.0')
    >>> graph = reachable(spec.init, spec)
    >>> len(graph.states), len(graph.edges)
    (3, 2)
    """
    if max_states < 1:
        raise ValueError('max_states must be positive')

    states: list[Process] = [init]
    index: dict[Process, int] = {init: 0}
    edges: list[Edge] = []
    queue: deque[int] = deque([0])
    while queue:
        i = queue.popleft()
        for d in step_original(states[i], spec):
            target = d.target
            if target not in index:
                if len(states) >= max_states:
                    frontier = [target, *(states[j] for j in queue)]
                    raise StateBoundExceeded(max_states, frontier)
                index[target] = len(states)
                states.append(target)
                queue.append(index[target])
            edges.append(Edge(i, d, d.label, index[target]))
        logger.debug('Explored state %d, %d discovered so far', i, len(states))

    logger.info('Reachable graph has %d states and %d edges', len(states), len(edges))
    return LtsGraph(states=tuple(states), edges=tuple(edges))
