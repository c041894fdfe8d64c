from abc_justness.paths.states import FinitePath, Path
from abc_justness.sos.rules import successors
from abc_justness.syntax.terms import Label, Process, Spec, Tau, is_send


def non_blocking(label: Label) -> bool:
    """
    Whether a label is an action no environment can block.

    Internal actions and broadcast sends are non-blocking; handshakes can be blocked
    by restriction, receives are inputs and discards are not actions at all.

    Examples
    --------
    >>> from abc_justness.syntax.terms import TAU, Broadcast, Handshake
    >>> [non_blocking(label) for label in (TAU, Broadcast('b', '!'), Broadcast('b', '?'), Handshake('c'))]
    [True, True, False, False]
    """
    return isinstance(label, Tau) or is_send(label)


def admits_non_blocking(process: Process, spec: Spec) -> bool:
    return any(non_blocking(label) for label, _ in successors(process, spec))


def progressing(path: Path, spec: Spec) -> bool:
    """Infinite paths progress; finite ones must stop where nothing non-blocking is possible."""
    if isinstance(path, FinitePath):
        return not admits_non_blocking(path.last, spec)
    return True
