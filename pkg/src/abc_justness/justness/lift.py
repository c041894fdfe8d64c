"""
Justness through lifts: a path over midway states is just iff some path of
derivations projecting onto it treats every non-blocking abstract transition fairly.
"""

import logging
from typing import override

from abc_justness.concurrency.abstract import (
    AbstractTransition,
    candidate_abstract_transitions,
    enabled,
    render_abstract,
)
from abc_justness.paths.lifts import has_unique_derivations, lifts
from abc_justness.paths.states import FinitePath, Path, render_path
from abc_justness.syntax.terms import Spec, is_process

from .checker import DecidesJustness
from .progress import non_blocking
from .results import JustnessVerdict

logger = logging.getLogger(__name__)


def _non_blocking_candidates(state, spec: Spec) -> list[AbstractTransition]:
    return [nu for nu in candidate_abstract_transitions(state, spec) if non_blocking(nu.label)]


def continuously_enabled(pi: Path, spec: Spec) -> list[AbstractTransition]:
    """
    Non-blocking abstract transitions that stay enabled from some point on.

    For a finite path this is whatever is enabled in its last state; for a lasso it
    is whatever is enabled at every state of the cycle.
    """
    if isinstance(pi, FinitePath):
        return _non_blocking_candidates(pi.last, spec)

    head = next(state for state in pi.cycle if is_process(state))
    return [
        nu
        for nu in _non_blocking_candidates(head, spec)
        if all(enabled(nu, state, spec) for state in pi.cycle)
    ]


def just_thm3_u(pi: Path, spec: Spec) -> bool:
    """
    Weak fairness of a path of derivations towards non-blocking abstract transitions.

    A non-blocking transition that is enabled forever from some point on would have
    to occur, but it cannot occur while it is enabled, so the path is just iff no
    such transition exists.

    Parameters
    ----------
    pi
        Finite path or lasso of processes and derivations
    spec
        Specification the path belongs to

    Returns
    -------
    bool
        True if no non-blocking abstract transition is continuously enabled
    """
    return not continuously_enabled(pi, spec)


class LiftChecker(DecidesJustness):
    """
    Justness checker that searches the lifts of a path for a fair one.

    A just answer is exact. An unjust answer covers the lifts whose choice of
    derivations repeats within ``lift_bound`` rounds of the cycle.
    """

    method = 'thm3-lift'

    def __init__(self, spec: Spec, lift_bound: int = 2):
        self.spec: Spec = spec
        self.lift_bound: int = lift_bound

    @override
    def verdict(self, path: Path) -> JustnessVerdict:
        obstructions = []
        for lift in lifts(path, self.lift_bound, self.spec):
            blocking = continuously_enabled(lift, self.spec)
            if not blocking:
                logger.debug('fair lift %s', render_path(lift))
                return {
                    'just': True,
                    'method': 'thm3-lift',
                    'lift_bound': self.lift_bound,
                    'exact': True,
                    'witness': {'lift': render_path(lift)},
                }
            obstructions.append(
                {'lift': render_path(lift), 'enabled': [render_abstract(nu) for nu in blocking]}
            )

        return {
            'just': False,
            'method': 'thm3-lift',
            'lift_bound': self.lift_bound,
            'exact': has_unique_derivations(path, self.spec),
            'witness': {'obstructions': obstructions},
        }


def just_s_via_lifts(rho: Path, k: int, spec: Spec) -> JustnessVerdict:
    """Justness of a path of midway states, decided on its lifts of period at most ``k``."""
    return LiftChecker(spec, k).verdict(rho)
