"""
Checks of the bundled fair scheduler.

The scheduler serves requests ``r1``, ``r2`` with tasks ``t1!``, ``t2!`` and separates any two
tasks by ``e!``. Three properties are checked: every request is eventually served, no finite
path serves more than was requested, and ``e!`` occurs between any two tasks.
"""

import logging
from typing import TypedDict

from abc_justness.checking import BoundedChecker, moves
from abc_justness.config import Bounds, load_bounds
from abc_justness.corpus import load_corpus
from abc_justness.logic import parse_ltl
from abc_justness.sos import LtsGraph
from abc_justness.syntax import Broadcast, Handshake, Label, Spec

logger = logging.getLogger(__name__)

TASK_SEPARATION = 'G((<t1!> | <t2!>) => X(((!(<t1!> | <t2!>)) U <e!>) | G !(<t1!> | <t2!>)))'


class DemoResult(TypedDict):
    name: str
    passed: bool
    detail: str


def served_within_requests(
    graph: LtsGraph, maxlen: int, pairs: list[tuple[Label, Label]]
) -> bool:
    """
    Whether no finite path of at most ``maxlen`` transitions has more occurrences of a
    serving label than of its requesting label, for every ``(request, serve)`` pair.

    Paths are explored as a frontier of states paired with the outstanding counts, which
    covers every finite path without listing them.
    """
    out = moves(graph)
    start = (graph.initial, (0,) * len(pairs))
    frontier = {start}
    seen = {start}
    for _ in range(maxlen):
        following = set()
        for state, owed in frontier:
            for label, target in out[state]:
                counts = tuple(
                    n + (label == request) - (label == serve)
                    for n, (request, serve) in zip(owed, pairs, strict=True)
                )
                if min(counts, default=0) < 0:
                    logger.info('Serving label %s outruns its requests', label)
                    return False
                node = (target, counts)
                if node not in seen:
                    seen.add(node)
                    following.add(node)
        frontier = following
    return True


def scheduler_suite(bounds: Bounds | None = None, spec: Spec | None = None) -> list[DemoResult]:
    """
    Run the three scheduler checks.

    Parameters
    ----------
    bounds
        Bounds for the checks, stem and cycle 12 by default
    spec
        Scheduler to check, the bundled one by default
    """
    bounds = bounds or load_bounds(stem=12, cycle=12, finlen=12)
    spec = spec or load_corpus('scheduler')
    checker = BoundedChecker(spec, (), bounds)
    results: list[DemoResult] = []

    statuses = []
    for i in (1, 2):
        verdict = checker.verdict(parse_ltl(f'G(<r{i}> => F <t{i}!>)', spec))
        statuses.append(f'i={i} {verdict["status"]}')
        logger.info('Request %d served: %s', i, verdict['status'])
    results.append(
        {
            'name': 'every request r_i is followed by t_i!',
            'passed': all(status.endswith('holds') for status in statuses),
            'detail': ', '.join(statuses),
        }
    )

    graph = checker.graph
    pairs: list[tuple[Label, Label]] = [
        (Handshake(f'r{i}'), Broadcast(f't{i}', '!')) for i in (1, 2)
    ]
    counted = served_within_requests(graph, bounds['finlen'], pairs)
    results.append(
        {
            'name': 'no finite path has more t_i! than r_i',
            'passed': counted,
            'detail': f'finite paths up to {bounds["finlen"]} transitions',
        }
    )

    verdict = checker.verdict(parse_ltl(TASK_SEPARATION, spec))
    results.append(
        {
            'name': 'e! occurs between any two tasks',
            'passed': verdict['status'] == 'holds',
            'detail': verdict['status'],
        }
    )
    return results
