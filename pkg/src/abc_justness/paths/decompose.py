"""
Decomposition of paths along the top-level operator of their processes.

A path of derivations of a parallel composition splits uniquely into one path per
component; a path of midway states may split in several ways, one per choice of
derivations, and those splits are obtained through its lifts.
"""

from abc_justness.sos.derivations import ParL, ParR, RelD, ResD, Sync
from abc_justness.syntax.terms import Par, Relabel, Restrict, Spec, is_process
from abc_justness.utils import dedupe

from .lifts import lifts
from .states import FinitePath, Lasso, MalformedPath, Mid, Path, hat


def _split(state) -> tuple:
    match state:
        case Par(left, right):
            return left, right
        case ParL(d, right):
            return d, right
        case ParR(left, d):
            return left, d
        case Sync(left, right):
            return left, right
    raise MalformedPath(f'{state!r} is not a state of a parallel composition')


def _contract(states: list) -> list:
    contracted: list = []
    for state in states:
        if not contracted or contracted[-1] != state:
            contracted.append(state)
    return contracted


def _component(path: Path, side: int) -> Path:
    if isinstance(path, FinitePath):
        return FinitePath(tuple(_contract([_split(s)[side] for s in path.states])))

    stem = [_split(s)[side] for s in path.stem]
    cycle = [_split(s)[side] for s in path.cycle]
    if all(s == cycle[0] for s in cycle):
        return FinitePath(tuple(_contract([*stem, cycle[0]])))

    n = len(cycle)
    kept = [i for i in range(n) if cycle[i] != cycle[i - 1]]
    j = kept[0]
    new_cycle = [cycle[i] for i in kept]
    new_stem = _contract([*stem, *cycle[:j]])
    if new_stem and new_stem[-1] == new_cycle[0]:
        new_stem.pop()
    return Lasso(tuple(new_stem), tuple(new_cycle)).normalized()


def decompose_par_u(path: Path) -> tuple[Path, Path]:
    """
    Split a path of a parallel composition into the paths of its components.

    Each state is projected to the left and right component and stuttering, where a
    component stays idle, is contracted. A component that stops moving yields a
    finite path even when ``path`` is a lasso.

    Parameters
    ----------
    path
        Path of processes and derivations, all of the form ``_|_``

    Returns
    -------
    tuple[Path, Path]
        Left and right component paths

    Raises
    ------
    MalformedPath
        If some state is not a parallel composition
    """
    return _component(path, 0), _component(path, 1)


def decompose_par_s(path: Path, spec: Spec, k: int = 2) -> list[tuple[Path, Path]]:
    """All splits of a path of midway states, through its lifts of period at most ``k``."""
    splits = []
    for lift in lifts(path, k, spec):
        left, right = decompose_par_u(lift)
        splits.append((hat(left).normalized(), hat(right).normalized()))
    return dedupe(splits)


def _strip(state):
    match state:
        case Restrict(body, _) | Relabel(body, _):
            return body
        case ResD(d, _) | RelD(d, _):
            return d
        case Mid(Restrict(src, _), label, Restrict(target, _)):
            return Mid(src, label, target)
    raise MalformedPath(f'{state!r} has no outer restriction or relabelling to strip')


def _map_states(path: Path, fn) -> Path:
    if isinstance(path, FinitePath):
        return FinitePath(tuple(map(fn, path.states)))
    return Lasso(tuple(map(fn, path.stem)), tuple(map(fn, path.cycle)))


def _check_head(path: Path, kind: type):
    for state in path.positions:
        process = state if is_process(state) else state.src
        if not isinstance(process, kind):
            raise MalformedPath(f'{process!r} is not a {kind.__name__} process')


def decompose_res(path: Path) -> Path:
    """Strip the outer restriction from every state of a path."""
    _check_head(path, Restrict)
    return _map_states(path, _strip)


def decompose_rel(path: Path) -> Path:
    """Strip the outer relabelling from every state of a path of derivations."""
    _check_head(path, Relabel)
    if any(isinstance(state, Mid) for state in path.positions):
        raise MalformedPath('relabelled paths of midway states are split with decompose_rel_s')
    return _map_states(path, _strip)


def decompose_rel_s(path: Path, spec: Spec, k: int = 2) -> list[Path]:
    """Inner paths of a relabelled path of midway states, one per choice of pre-image labels."""
    return dedupe(hat(decompose_rel(lift)).normalized() for lift in lifts(path, k, spec))
