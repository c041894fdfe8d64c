"""
Strong bisimilarity by signature refinement.

States start in a single class; every round renumbers states by the set of
``(label, class of target)`` pairs they can reach in one transition, until the
numbering stops changing.
"""

import logging

from abc_justness.sos.lts import DEFAULT_MAX_STATES, reachable
from abc_justness.sos.rules import successors
from abc_justness.syntax.printer import pretty_print
from abc_justness.syntax.terms import Process, Spec

logger = logging.getLogger(__name__)


def _union_states(roots: list[Process], spec: Spec, max_states: int) -> list[Process]:
    states: dict[Process, None] = {}
    for root in roots:
        states.update(dict.fromkeys(reachable(root, spec, max_states).states))
    return list(states)


def _refine(states: list[Process], spec: Spec) -> dict[Process, int]:
    moves = {p: successors(p, spec) for p in states}
    classes = dict.fromkeys(states, 0)
    rounds = 0
    while True:
        rounds += 1
        signatures = {
            p: frozenset((str(label), classes[target]) for label, target in moves[p])
            for p in states
        }
        numbering: dict[tuple, int] = {}
        refined = {}
        for p in states:
            key = (classes[p], signatures[p])
            refined[p] = numbering.setdefault(key, len(numbering))
        if len(numbering) == len(set(classes.values())):
            logger.debug('Stable after %d rounds with %d classes', rounds, len(numbering))
            return refined
        classes = refined


def bisimulation_classes(
    roots: list[Process], spec: Spec, max_states: int = DEFAULT_MAX_STATES
) -> list[list[Process]]:
    """
    Strong bisimulation classes of the states reachable from some processes.

    Parameters
    ----------
    roots
        Processes whose reachable states are partitioned together
    spec
        Specification supplying the defining equations
    max_states
        Exploration bound for each root

    Returns
    -------
    list[list[Process]]
        Classes in order of first discovery, each listing its states in discovery order

    Raises
    ------
    StateBoundExceeded
        If some root reaches more than ``max_states`` states
    """
    states = _union_states(roots, spec, max_states)
    classes = _refine(states, spec)
    partition: dict[int, list[Process]] = {}
    for p in states:
        partition.setdefault(classes[p], []).append(p)
    return list(partition.values())


def bisimilar(p: Process, q: Process, spec: Spec, max_states: int = DEFAULT_MAX_STATES) -> bool:
    """
    Whether two processes are strongly bisimilar under the original semantics.

    Examples
    --------
    >>> from abc_justness.syntax import parse_process, parse_spec
    >>> spec = parse_spec('init 0')
    >>> bisimilar(parse_process('a.0 + a.0', spec).init, parse_process('a.0', spec).init, spec)
    True
    """
    states = _union_states([p, q], spec, max_states)
    classes = _refine(states, spec)
    same = classes[p] == classes[q]
    logger.info(
        '%s and %s are %sbisimilar', pretty_print(p), pretty_print(q), '' if same else 'not '
    )
    return same
