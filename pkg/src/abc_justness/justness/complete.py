from collections.abc import Iterable

from abc_justness.logic.evaluate import Evaluator
from abc_justness.logic.ltl import LtlFormula
from abc_justness.paths.states import Path
from abc_justness.syntax.terms import Spec

from .def1 import Def1Checker, full_y
from .progress import progressing


def fair(path: Path, fs: Iterable[LtlFormula], spec: Spec | None = None) -> bool:
    """Whether a path satisfies every formula of a fairness specification."""
    formulas = list(fs)
    if not formulas:
        return True
    evaluator = Evaluator(formulas, spec)
    values = evaluator.table(path)[0]
    return all(values[evaluator.index[f]] for f in formulas)


def complete(path: Path, fs: Iterable[LtlFormula], spec: Spec, lift_bound: int = 2) -> bool:
    """
    Whether a path counts as a run of the system: progressing, just and fair.

    Parameters
    ----------
    path
        Finite path or lasso of processes and midway states
    fs
        Fairness specification
    spec
        Specification the path belongs to
    lift_bound
        Lift period bound used by the justness check

    Returns
    -------
    bool
        True if the path is complete
    """
    if not progressing(path, spec) or not fair(path, fs, spec):
        return False
    return Def1Checker(spec, lift_bound).y_just(path, full_y(spec))
