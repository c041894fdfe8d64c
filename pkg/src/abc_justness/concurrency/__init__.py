"""Concurrency between derivations, abstract transitions and their enabledness"""

from .abstract import (
    AbstractTransition,
    AParL,
    AParR,
    APrefix,
    ARel,
    ARes,
    ASync,
    NoAbstractTransition,
    abstract_of,
    candidate_abstract_transitions,
    enabled,
    equiv,
    has_abstract_transition,
    occurs,
    render_abstract,
    representatives,
)
from .relation import concurrent, concurrent_oneway

__all__ = [
    'AParL',
    'AParR',
    'APrefix',
    'ARel',
    'ARes',
    'ASync',
    'AbstractTransition',
    'NoAbstractTransition',
    'abstract_of',
    'candidate_abstract_transitions',
    'concurrent',
    'concurrent_oneway',
    'enabled',
    'equiv',
    'has_abstract_transition',
    'occurs',
    'render_abstract',
    'representatives',
]
