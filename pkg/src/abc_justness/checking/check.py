"""
Bounded checking of LTL properties over complete paths.

The complete paths considered are the progressing finite paths of at most ``finlen``
transitions and the just lassos whose cycle is a simple cycle of at most ``cycle``
transitions reached by a stem of at most ``stem`` transitions, all of them satisfying
the fairness specification.

A counterexample search does not list those paths one by one. Justness of a lasso
depends on its cycle only, and the truth of a formula along a stem is determined
state by state from the truth values where the stem meets the cycle, so stems are
searched backwards from the cycle over pairs of a state and a vector of truth
values. The justness check then runs only for cycles some violating stem reaches.
"""

import logging
from collections.abc import Callable, Iterable, Iterator

from abc_justness.config import Bounds, default_bounds
from abc_justness.justness.complete import fair
from abc_justness.justness.def1 import Def1Checker, full_y
from abc_justness.justness.lift import LiftChecker
from abc_justness.justness.progress import admits_non_blocking
from abc_justness.logic.evaluate import AtomLevelMismatch, Evaluator
from abc_justness.logic.ltl import AtomEn, AtomNu, LtlFormula, closure, is_label_only
from abc_justness.paths.states import (
    FinitePath,
    Lasso,
    Mid,
    Path,
    path_to_dict,
    render_path,
    rotate,
)
from abc_justness.sos.lts import LtsGraph, reachable
from abc_justness.syntax.terms import Spec

from .enumeration import (
    Move,
    chain,
    distances,
    finite_paths,
    lassos,
    predecessors,
    simple_cycles,
)
from .results import Verdict

logger = logging.getLogger(__name__)

Row = tuple[bool, ...]


class _StemSearch:
    """Shortest stems from the initial state that arrive somewhere with given truth values."""

    def __init__(self, graph: LtsGraph, evaluator: Evaluator, wanted: Callable[[Row], bool]):
        self.graph: LtsGraph = graph
        self.evaluator: Evaluator = evaluator
        self.wanted: Callable[[Row], bool] = wanted
        self.entering = predecessors(graph)
        self.dist = distances(graph)
        self._memo: dict[tuple[int, Row, int], list[Move] | None] = {}

    def find(self, state: int, row: Row, budget: int) -> list[Move] | None:
        key = (state, row, budget)
        if key not in self._memo:
            self._memo[key] = self._search(state, row, budget)
        return self._memo[key]

    def _search(self, state: int, row: Row, budget: int) -> list[Move] | None:
        init = self.graph.initial
        states = self.graph.states
        start = (state, row)
        if state == init and self.wanted(row):
            return []

        parents: dict[tuple[int, Row], tuple[tuple[int, Row], Move] | None] = {start: None}
        frontier = [start]
        for depth in range(budget):
            remaining = budget - depth - 1
            following = []
            for node in frontier:
                target, target_row = node
                for src, label in self.entering[target]:
                    reach = self.dist[src]
                    if reach is None or reach > remaining:
                        continue
                    mid = Mid(states[src], label, states[target])
                    mid_row = self.evaluator.step(mid, target_row)
                    key = (src, self.evaluator.step(states[src], mid_row))
                    if key in parents:
                        continue
                    parents[key] = (node, (label, target))
                    if src == init and self.wanted(key[1]):
                        return self._unwind(key, parents)
                    following.append(key)
            frontier = following
        return None

    @staticmethod
    def _unwind(key, parents) -> list[Move]:
        steps = []
        while parents[key] is not None:
            key, move = parents[key]
            steps.append(move)
        return steps


class BoundedChecker:
    """
    Complete paths of one specification within a set of bounds.

    Justness is decided by the clause-based checker and cross-checked against the
    lift-based checker on every lasso; lassos where the two disagree are collected in
    :attr:`disagreements`.

    Parameters
    ----------
    spec
        Specification whose initial process is explored
    fs
        Fairness specification over label atoms
    bounds
        Exploration bounds, the configured defaults when omitted
    """

    def __init__(self, spec: Spec, fs: Iterable[LtlFormula] = (), bounds: Bounds | None = None):
        self.spec: Spec = spec
        self.fs: tuple[LtlFormula, ...] = tuple(fs)
        self.bounds: Bounds = bounds or default_bounds()
        self.graph: LtsGraph = reachable(spec.init, spec, self.bounds['max_states'])
        self.def1: Def1Checker = Def1Checker(spec, self.bounds['lift'])
        self.lift: LiftChecker = LiftChecker(spec, self.bounds['lift'])
        self.disagreements: list[str] = []
        self._quiescent = [not admits_non_blocking(p, spec) for p in self.graph.states]
        self._cycles: list[tuple[int, list[Move]]] | None = None
        self._cycle_justness: dict[tuple, bool] = {}

    def is_just(self, path: Path) -> bool:
        just = self.def1.y_just(path, full_y(self.spec))
        if isinstance(path, Lasso) and self.lift.verdict(path)['just'] != just:
            text = render_path(path)
            logger.warning('Justness checkers disagree on %s', text)
            self.disagreements.append(text)
        return just

    def complete_paths(self) -> Iterator[Path]:
        """
        Complete paths within the bounds: finite ones first, then lassos, both in
        depth-first order.
        """
        finite = 0
        for path in finite_paths(self.graph, self.bounds['finlen']):
            if (
                self._quiescent[self.graph.index[path.last]]
                and fair(path, self.fs, self.spec)
                and self.is_just(path)
            ):
                finite += 1
                yield path

        infinite = 0
        for lasso in lassos(self.graph, self.bounds['stem'], self.bounds['cycle']):
            if fair(lasso, self.fs, self.spec) and self.is_just(lasso):
                infinite += 1
                yield lasso
        logger.info('Found %d complete finite paths and %d complete lassos', finite, infinite)

    def cycles(self) -> list[tuple[int, list[Move]]]:
        """Simple cycles within the cycle bound, enumerated once per checker."""
        if self._cycles is None:
            self._cycles = list(simple_cycles(self.graph, self.bounds['cycle']))
            logger.info('Found %d simple cycles', len(self._cycles))
        return self._cycles

    def _evaluator(self, phi: LtlFormula) -> Evaluator:
        for formula in (phi, *self.fs):
            if not is_label_only(formula):
                atom = next(f for f in closure(formula) if isinstance(f, AtomNu | AtomEn))
                raise AtomLevelMismatch(atom)
        return Evaluator([phi, *self.fs], self.spec)

    def _finite_candidates(self, search: _StemSearch) -> Iterator[FinitePath]:
        evaluator = search.evaluator
        budget = self.bounds['finlen']
        for q, state in enumerate(self.graph.states):
            reach = search.dist[q]
            if not self._quiescent[q] or reach is None or reach > budget:
                continue
            steps = search.find(q, evaluator.step(state, None), budget)
            if steps is None:
                continue
            path = FinitePath(chain(self.graph, self.graph.initial, steps))
            if self.is_just(path):
                yield path
            else:
                logger.warning('Progressing finite path judged unjust: %s', render_path(path))
                self.disagreements.append(render_path(path))

    def _lasso_candidates(self, search: _StemSearch) -> Iterator[Lasso]:
        evaluator = search.evaluator
        budget = self.bounds['stem']
        examined = 0
        for root, steps in self.cycles():
            vertices = [root, *(target for _, target in steps[:-1])]
            entries = [
                r
                for r, v in enumerate(vertices)
                if (reach := search.dist[v]) is not None and reach <= budget
            ]
            if not entries:
                continue
            examined += 1
            cycle = chain(self.graph, root, steps)[:-1]
            rows = evaluator.table(Lasso((), cycle))
            cycle_just = self._cycle_justness.get(cycle)
            for r in entries:
                stem_steps = search.find(vertices[r], rows[2 * r], budget)
                if stem_steps is None:
                    continue
                if cycle_just is None:
                    cycle_just = self._cycle_justness[cycle] = self.is_just(Lasso((), cycle))
                if not cycle_just:
                    logger.debug('Violating cycle is unjust: %s', render_path(Lasso((), cycle)))
                    break
                stem = chain(self.graph, self.graph.initial, stem_steps)[:-1]
                lasso = Lasso(stem, rotate(cycle, 2 * r)).normalized()
                if self.is_just(lasso):
                    yield lasso
                else:
                    logger.debug('Lasso with a just cycle is unjust: %s', render_path(lasso))
        logger.info('Examined %d simple cycles', examined)

    def counterexample(self, phi: LtlFormula) -> Path | None:
        """
        First complete path within the bounds that violates ``phi``.

        Finite paths are tried before lassos; ties are broken by state discovery order
        and then by stem length.

        Raises
        ------
        AtomLevelMismatch
            If a formula uses abstract-transition atoms
        """
        evaluator = self._evaluator(phi)
        violated = evaluator.index[phi]
        constraints = [evaluator.index[f] for f in self.fs]

        def wanted(row: Row) -> bool:
            return not row[violated] and all(row[k] for k in constraints)

        search = _StemSearch(self.graph, evaluator, wanted)
        for path in self._finite_candidates(search):
            return path
        for path in self._lasso_candidates(search):
            return path
        return None

    def verdict(self, phi: LtlFormula) -> Verdict:
        """
        Check one property against the complete paths within the bounds.

        Cycles and the justness of every examined cycle are shared between calls, so one
        checker can decide several properties of the same specification.
        """
        path = self.counterexample(phi)
        if path is not None:
            logger.info('Counterexample %s', render_path(path))
            return {
                'status': 'fails',
                'bounds': self.bounds,
                'counterexample': path_to_dict(path),
            }
        if self.disagreements:
            reason = f'justness checkers disagree on {len(self.disagreements)} paths'
            logger.warning(reason)
            return {'status': 'unknown', 'bounds': self.bounds, 'reason': reason}
        return {'status': 'holds', 'bounds': self.bounds}


def enumerate_complete(
    spec: Spec, fs: Iterable[LtlFormula] = (), bounds: Bounds | None = None
) -> Iterator[Path]:
    """
    Complete paths of the initial process within the bounds.

    Parameters
    ----------
    spec
        Specification whose initial process is explored
    fs
        Fairness specification over label atoms
    bounds
        Exploration bounds, the configured defaults when omitted

    Raises
    ------
    StateBoundExceeded
        If the reachable graph has more than ``bounds['max_states']`` states

    Examples
    --------
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('init b1!.b2!.0')
    >>> [len(path.positions) for path in enumerate_complete(spec)]
    [5]
    """
    yield from BoundedChecker(spec, fs, bounds).complete_paths()


def check(
    spec: Spec, phi: LtlFormula, fs: Iterable[LtlFormula] = (), bounds: Bounds | None = None
) -> Verdict:
    """
    Whether every complete path of the initial process within the bounds satisfies ``phi``.

    Parameters
    ----------
    spec
        Specification whose initial process is explored
    phi
        Property over label atoms
    fs
        Fairness specification over label atoms
    bounds
        Exploration bounds, the configured defaults when omitted

    Returns
    -------
    Verdict
        ``fails`` with the first violating complete path, ``unknown`` if the justness
        checkers disagreed on some lasso, ``holds`` otherwise
    """
    return BoundedChecker(spec, fs, bounds).verdict(phi)
