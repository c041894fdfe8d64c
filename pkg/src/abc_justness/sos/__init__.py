"""Operational semantics of ABC: derivations, both step relations and state-space exploration"""

from .derivations import (
    Derivation,
    Dis0,
    Dis1,
    Dis2,
    DisRel,
    ParL,
    ParR,
    PrefixD,
    RecD,
    RelD,
    ResD,
    SumL,
    SumR,
    Sync,
    compose,
    is_derivation,
    render,
)
from .lts import DEFAULT_MAX_STATES, Edge, LtsGraph, StateBoundExceeded, reachable
from .rules import Stepper, admits, step_discard, step_original, stepper_for, successors

__all__ = [
    'DEFAULT_MAX_STATES',
    'Derivation',
    'Dis0',
    'Dis1',
    'Dis2',
    'DisRel',
    'Edge',
    'LtsGraph',
    'ParL',
    'ParR',
    'PrefixD',
    'RecD',
    'RelD',
    'ResD',
    'StateBoundExceeded',
    'Stepper',
    'SumL',
    'SumR',
    'Sync',
    'admits',
    'compose',
    'is_derivation',
    'reachable',
    'render',
    'step_discard',
    'step_original',
    'stepper_for',
    'successors',
]
