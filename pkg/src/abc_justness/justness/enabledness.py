from abc_justness.concurrency.abstract import (
    AbstractTransition,
    AParL,
    AParR,
    ARel,
    ARes,
    ASync,
    enabled,
)
from abc_justness.paths.decompose import decompose_par_u, decompose_rel, decompose_res
from abc_justness.paths.states import FinitePath, Path, suffix_classes
from abc_justness.sos.derivations import ParL, ParR, RelD, ResD, Sync
from abc_justness.syntax.terms import Par, Relabel, Restrict, Spec


def _operator(state) -> type | None:
    match state:
        case Par() | ParL() | ParR() | Sync():
            return Par
        case Restrict() | ResD():
            return Restrict
        case Relabel() | RelD():
            return Relabel
    return None


def _locally_enabled(pi: Path, nu: AbstractTransition, spec: Spec) -> bool:
    if isinstance(pi, FinitePath) and enabled(nu, pi.last, spec):
        return True

    operator = _operator(pi.positions[0])
    match nu:
        case AParL(inner) if operator is Par:
            return nu_enabled(decompose_par_u(pi)[0], inner, spec)
        case AParR(inner) if operator is Par:
            return nu_enabled(decompose_par_u(pi)[1], inner, spec)
        case ASync(left, right) if operator is Par:
            left_path, right_path = decompose_par_u(pi)
            return nu_enabled(left_path, left, spec) and nu_enabled(right_path, right, spec)
        case ARes(inner, name) if operator is Restrict and pi.positions[0].name == name:
            return nu_enabled(decompose_res(pi), inner, spec)
        case ARel(inner, f) if operator is Relabel and pi.positions[0].f == f:
            return nu_enabled(decompose_rel(pi), inner, spec)
    return False


def nu_enabled(pi: Path, nu: AbstractTransition, spec: Spec) -> bool:
    """
    Whether a path of derivations is ν-enabled.

    This is the least family closed under: a finite path whose last state enables
    ``nu``; a path of a composed state whose component paths are enabled for the
    matching parts of ``nu``; and any path with a ν-enabled suffix.

    Parameters
    ----------
    pi
        Finite path or lasso of processes and derivations
    nu
        Abstract transition
    spec
        Specification the path belongs to

    Returns
    -------
    bool
        True if some suffix of ``pi`` satisfies one of the generating clauses
    """
    return any(_locally_enabled(suffix, nu, spec) for suffix in suffix_classes(pi))
