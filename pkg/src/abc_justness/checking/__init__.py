"""Complete-path enumeration, bounded property checking and strong bisimilarity"""

from .bisim import bisimilar, bisimulation_classes
from .check import BoundedChecker, check, enumerate_complete
from .enumeration import (
    distances,
    enumerate_finite_paths,
    enumerate_lassos,
    finite_paths,
    lassos,
    moves,
    predecessors,
    simple_cycles,
)
from .results import Verdict

__all__ = [
    'BoundedChecker',
    'Verdict',
    'bisimilar',
    'bisimulation_classes',
    'check',
    'distances',
    'enumerate_complete',
    'enumerate_finite_paths',
    'enumerate_lassos',
    'finite_paths',
    'lassos',
    'moves',
    'predecessors',
    'simple_cycles',
]
