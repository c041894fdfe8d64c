from abc_justness.sos.derivations import is_derivation, render
from abc_justness.sos.rules import step_original, successors
from abc_justness.syntax.terms import Spec, is_process

from .states import MalformedPath, Mid, Path


def validate_u_path(path: Path, spec: Spec) -> Path:
    """
    Check that every derivation state of a path is a derivation of ``spec``.

    Adjacency and alternation are checked when the path is built; this adds the
    check against the operational semantics.

    Raises
    ------
    MalformedPath
        If a state is neither a process nor an original-semantics derivation
    """
    for state in path.positions:
        if is_process(state):
            continue
        if not is_derivation(state) or state not in step_original(state.src, spec):
            raise MalformedPath(f'{state!r} is not a derivation of the specification')
    return path


def validate_s_path(path: Path, spec: Spec) -> Path:
    """Check that every midway state of a path stands for a transition of ``spec``."""
    for state in path.positions:
        if is_process(state):
            continue
        if not isinstance(state, Mid):
            raise MalformedPath(f'{render(state)} is a derivation, not a midway state')
        if (state.label, state.target) not in successors(state.src, spec):
            raise MalformedPath(f'{state} is not a transition of the specification')
    return path
