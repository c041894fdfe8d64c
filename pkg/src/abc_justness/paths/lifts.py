import itertools
import logging

from abc_justness.sos.derivations import Derivation
from abc_justness.sos.rules import step_original
from abc_justness.syntax.terms import Spec
from abc_justness.utils import dedupe

from .states import FinitePath, Lasso, MalformedPath, Mid, Path

logger = logging.getLogger(__name__)


def derivations_of(mid: Mid, spec: Spec) -> list[Derivation]:
    """Derivations of the transition a midway state stands for."""
    return [
        d
        for d in step_original(mid.src, spec)
        if d.label == mid.label and d.target == mid.target
    ]


def has_unique_derivations(path: Path, spec: Spec) -> bool:
    """Whether every transition of a path of midway states has exactly one derivation."""
    mids = [state for state in path.positions if isinstance(state, Mid)]
    return all(len(derivations_of(mid, spec)) == 1 for mid in mids)


def _choices(states: tuple, spec: Spec) -> list[list]:
    choices = []
    for state in states:
        if not isinstance(state, Mid):
            choices.append([state])
            continue
        derivations = derivations_of(state, spec)
        if not derivations:
            raise MalformedPath(f'{state} from {state.src} is not a transition')
        choices.append(derivations)
    return choices


def lifts(rho: Path, k: int, spec: Spec) -> list[Path]:
    """
    Paths of derivation states that project onto ``rho``.

    For a lasso the cycle is unrolled ``m = 1..k`` times before each midway state is
    replaced by one of its derivations, so the lifts are exactly those whose choice
    of derivations repeats with period at most ``k`` rounds of the cycle. Derivation
    states of ``rho`` are kept as they are, so a path of derivations is its own lift.

    Parameters
    ----------
    rho
        Path of midway states
    k
        Largest number of cycle rounds in one period of the lift
    spec
        Specification the transitions belong to

    Returns
    -------
    list[Path]
        Distinct normalized lifts, in enumeration order
    """
    if k < 1:
        raise ValueError('lift period bound must be positive')

    if isinstance(rho, FinitePath):
        choices = _choices(rho.states, spec)
        return dedupe(FinitePath(tuple(choice)) for choice in itertools.product(*choices))

    result: list[Path] = []
    for m in range(1, k + 1):
        cycle = rho.cycle * m
        for choice in itertools.product(*_choices((*rho.stem, *cycle), spec)):
            result.append(Lasso(choice[: len(rho.stem)], choice[len(rho.stem) :]).normalized())
    result = dedupe(result)
    logger.debug('%d lifts up to period %d', len(result), k)
    return result
