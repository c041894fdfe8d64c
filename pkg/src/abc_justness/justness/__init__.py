"""Progress, justness and completeness of paths"""

from collections.abc import Callable

from abc_justness.syntax.terms import Spec

from .checker import DecidesJustness
from .complete import complete, fair
from .def1 import Def1Checker, full_y, just_def1, minimize, y_just_def1
from .enabledness import nu_enabled
from .lift import LiftChecker, continuously_enabled, just_s_via_lifts, just_thm3_u
from .progress import admits_non_blocking, non_blocking, progressing
from .results import JustnessMethod, JustnessVerdict

_justness_checkers_registry: dict[str, Callable[[Spec, int], DecidesJustness]] = {}


def register_justness_checker(method: str, factory: Callable[[Spec, int], DecidesJustness]):
    """
    Register a justness checker under a method name.

    Parameters
    ----------
    method
        Name the checker is looked up by, as it appears in verdicts
    factory
        Callable building the checker from a specification and a lift period bound

    Examples
    --------
    >>> register_justness_checker('def1', Def1Checker)
    """
    _justness_checkers_registry[method] = factory


def get_justness_checker(method: str, spec: Spec, lift_bound: int = 2) -> DecidesJustness:
    """
    Build the justness checker registered under a method name.

    Raises
    ------
    ValueError
        If no checker is registered under ``method``
    """
    try:
        factory = _justness_checkers_registry[method]
    except KeyError as e:
        raise ValueError(f'No justness checker registered for method {method}') from e
    return factory(spec, lift_bound)


def justness_methods() -> list[str]:
    return sorted(_justness_checkers_registry)


def witness_lines(verdict: JustnessVerdict) -> list[str]:
    """Indented text lines describing the witness of a verdict."""
    witness = verdict['witness']
    if witness is None:
        return []
    if 'obstructions' in witness:
        return [
            f'lift {item["lift"]} leaves {", ".join(item["enabled"])} enabled'
            for item in witness['obstructions']
        ]
    if 'lift' in witness:
        return [f'fair lift {witness["lift"]}']
    if 'reason' in witness:
        return [f'{witness["path"]}: {witness["reason"]}']

    lines: list[str] = []

    def walk(node: dict, depth: int):
        blocked = '{' + ', '.join(node['blocked']) + '}'
        lines.append(f'{"  " * depth}{node["path"]} blocked {blocked}')
        for split in node['splits']:
            indent = '  ' * (depth + 1)
            lines.append(f'{indent}suffix {split["at"]} splits by {split["operator"]}')
            for part in split['parts']:
                walk(part, depth + 2)

    walk(witness, 0)
    return lines


register_justness_checker('def1', Def1Checker)
register_justness_checker('thm3-lift', LiftChecker)

__all__ = [
    'DecidesJustness',
    'Def1Checker',
    'JustnessMethod',
    'JustnessVerdict',
    'LiftChecker',
    'admits_non_blocking',
    'complete',
    'continuously_enabled',
    'fair',
    'full_y',
    'get_justness_checker',
    'just_def1',
    'just_s_via_lifts',
    'just_thm3_u',
    'justness_methods',
    'minimize',
    'non_blocking',
    'nu_enabled',
    'progressing',
    'register_justness_checker',
    'witness_lines',
    'y_just_def1',
]
