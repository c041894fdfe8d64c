"""
Justness as the largest family of Y-just paths.

For a path the set of blocked handshake sets ``Y`` under which it is Y-just is
upward closed, so it is kept as the antichain of its minimal members. Each clause
contributes such an antichain: the final state of a finite path, and the
decomposition of every suffix that starts in a parallel composition, a restriction
or a relabelling. Two constraints are conjoined by taking pairwise unions.

Decomposition always yields paths of strictly smaller processes, and the suffixes of
a path are enumerated up front, so the recursion is well founded and the largest
family is reached without iterating.
"""

import logging
from collections.abc import Iterable
from typing import TypeAlias, override

from abc_justness.paths.decompose import decompose_par_s, decompose_rel_s, decompose_res
from abc_justness.paths.lifts import has_unique_derivations
from abc_justness.paths.states import FinitePath, Path, render_path, suffix_classes
from abc_justness.sos.rules import successors
from abc_justness.syntax.terms import (
    Handshake,
    Par,
    Process,
    Relabel,
    Relabelling,
    Restrict,
    Spec,
    apply_relabelling,
    complement,
    is_process,
)

from .checker import DecidesJustness
from .progress import non_blocking
from .results import JustnessVerdict

logger = logging.getLogger(__name__)

YSet: TypeAlias = frozenset[Handshake]
Antichain: TypeAlias = frozenset[YSet]

ANYTHING: Antichain = frozenset({frozenset()})
NOTHING: Antichain = frozenset()


def minimize(sets: Iterable[YSet]) -> Antichain:
    """
    Minimal members of a family of sets.

    Examples
    --------
    >>> c, d = Handshake('c'), Handshake('d')
    >>> minimize([frozenset({c, d}), frozenset({c})]) == {frozenset({c})}
    True
    """
    candidates = sorted(set(sets), key=len)
    kept: list[YSet] = []
    for candidate in candidates:
        if not any(smaller <= candidate for smaller in kept):
            kept.append(candidate)
    return frozenset(kept)


def meet(left: Antichain, right: Antichain) -> Antichain:
    """Antichain of the sets satisfying both constraints."""
    return minimize(x | z for x in left for z in right)


def bar(ys: YSet) -> YSet:
    return frozenset(map(complement, ys))


def full_y(spec: Spec) -> YSet:
    """Every handshake action of the specification; justness is justness for this set."""
    return spec.handshake_actions


def show_y(ys: YSet) -> list[str]:
    return sorted(map(str, ys))


def _relabel_y(f: Relabelling, ys: YSet) -> YSet:
    return frozenset(apply_relabelling(f, h) for h in ys)  # type: ignore[misc]


def _head(path: Path) -> Process | None:
    state = path.positions[0]
    return state if is_process(state) else None  # type: ignore[return-value]


class Def1Checker(DecidesJustness):
    """
    Justness checker working directly on the clauses of Y-justness.

    Minimal sets are memoised per normalized path for the lifetime of the checker.

    Parameters
    ----------
    spec
        Specification the paths belong to
    lift_bound
        Largest lift period used to split paths whose transitions have several
        derivations
    """

    method = 'def1'

    def __init__(self, spec: Spec, lift_bound: int = 2):
        self.spec: Spec = spec
        self.lift_bound: int = lift_bound
        self._memo: dict[Path, Antichain] = {}
        self._pending: set[Path] = set()

    def minimal_sets(self, path: Path) -> Antichain:
        """Minimal ``Y`` for which ``path`` is Y-just; empty if the path is unjust."""
        path = path.normalized()
        if path in self._memo:
            return self._memo[path]
        if path in self._pending:
            logger.debug('revisited %s, assumed just', render_path(path))
            return ANYTHING

        self._pending.add(path)
        try:
            result = ANYTHING
            if isinstance(path, FinitePath):
                result = self._final(path.last)
            for suffix in suffix_classes(path):
                if not result:
                    break
                if _head(suffix) is not None:
                    result = meet(result, self._structural(suffix))
        finally:
            self._pending.discard(path)

        self._memo[path] = result
        logger.debug('%s: %d minimal sets', render_path(path), len(result))
        return result

    def y_just(self, path: Path, ys: YSet) -> bool:
        return any(m <= ys for m in self.minimal_sets(path))

    def _final(self, process: Process) -> Antichain:
        labels = [label for label, _ in successors(process, self.spec)]
        if any(non_blocking(label) for label in labels):
            return NOTHING
        return frozenset({frozenset(label for label in labels if isinstance(label, Handshake))})

    def _structural(self, path: Path) -> Antichain:
        match _head(path):
            case Par():
                return self._par(path)
            case Restrict(_, name):
                return self._restrict(path, name)
            case Relabel(_, f):
                return self._relabel(path, f)
        return ANYTHING

    def _par_options(self, path: Path):
        for left, right in decompose_par_s(path, self.spec, self.lift_bound):
            for x in self.minimal_sets(left):
                for z in self.minimal_sets(right):
                    if not x & bar(z):
                        yield left, right, x, z

    def _par(self, path: Path) -> Antichain:
        return minimize(x | z for _, _, x, z in self._par_options(path))

    def _restrict(self, path: Path, name: str) -> Antichain:
        hidden = {Handshake(name), Handshake(name, barred=True)}
        return minimize(m - hidden for m in self.minimal_sets(decompose_res(path)))

    def _relabel_options(self, path: Path):
        for inner in decompose_rel_s(path, self.spec, self.lift_bound):
            for m in self.minimal_sets(inner):
                yield inner, m

    def _relabel(self, path: Path, f: Relabelling) -> Antichain:
        return minimize(_relabel_y(f, m) for _, m in self._relabel_options(path))

    def certificate(self, path: Path, ys: YSet) -> dict:
        """
        Decomposition tree showing that ``path`` is Y-just.

        Every suffix starting in a composed process records the split that satisfies
        its clause, recursively.
        """
        splits = []
        for i, suffix in enumerate(suffix_classes(path.normalized())):
            match _head(suffix):
                case Par():
                    for left, right, x, z in self._par_options(suffix):
                        if x | z <= ys:
                            parts = [self.certificate(left, x), self.certificate(right, z)]
                            splits.append({'at': i, 'operator': 'par', 'parts': parts})
                            break
                case Restrict(_, name):
                    widened = ys | {Handshake(name), Handshake(name, barred=True)}
                    inner = decompose_res(suffix)
                    m = next(m for m in self.minimal_sets(inner) if m <= widened)
                    splits.append(
                        {'at': i, 'operator': 'restrict', 'parts': [self.certificate(inner, m)]}
                    )
                case Relabel(_, f):
                    for inner, m in self._relabel_options(suffix):
                        if _relabel_y(f, m) <= ys:
                            parts = [self.certificate(inner, m)]
                            splits.append({'at': i, 'operator': 'relabel', 'parts': parts})
                            break
        return {'path': render_path(path), 'blocked': show_y(ys), 'splits': splits}

    def obstruction(self, path: Path) -> dict:
        """The first clause that no blocked set can satisfy."""
        path = path.normalized()
        if isinstance(path, FinitePath) and not self._final(path.last):
            return {
                'path': render_path(path),
                'reason': 'final state admits a non-blocking action',
            }

        constraint = ANYTHING
        for suffix in suffix_classes(path):
            if _head(suffix) is None:
                continue
            constraint = meet(constraint, self._structural(suffix))
            if not constraint:
                return {
                    'path': render_path(path),
                    'reason': f'no consistent decomposition of the suffix {render_path(suffix)}',
                }
        return {'path': render_path(path), 'reason': 'unjust'}

    @override
    def verdict(self, path: Path) -> JustnessVerdict:
        ys = full_y(self.spec)
        fitting = sorted(
            (m for m in self.minimal_sets(path) if m <= ys), key=lambda m: (len(m), show_y(m))
        )
        just = bool(fitting)
        witness = self.certificate(path, fitting[0]) if just else self.obstruction(path)
        return {
            'just': just,
            'method': 'def1',
            'lift_bound': self.lift_bound,
            'exact': just or has_unique_derivations(path, self.spec),
            'witness': witness,
        }


def y_just_def1(path: Path, ys: YSet, spec: Spec, lift_bound: int = 2) -> bool:
    """
    Whether a path is Y-just.

    Parameters
    ----------
    path
        Finite path or lasso of processes and midway states
    ys
        Handshake actions the environment eventually blocks
    spec
        Specification the path belongs to
    lift_bound
        Lift period bound for splitting paths with ambiguous transitions

    Returns
    -------
    bool
        True if ``ys`` contains one of the minimal blocked sets of the path

    Examples
    --------
    >>> from abc_justness.paths import Lasso, Mid
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('agent B = c.B + b!.0\\ninit B')
    >>> b = spec.init
    >>> loop = Lasso((), (b, Mid(b, Handshake('c'), b)))
    >>> y_just_def1(loop, frozenset(), spec)
    True
    """
    return Def1Checker(spec, lift_bound).y_just(path, ys)


def just_def1(path: Path, spec: Spec, lift_bound: int = 2) -> JustnessVerdict:
    """Justness of a path: Y-justness for the full handshake set of the specification."""
    return Def1Checker(spec, lift_bound).verdict(path)
