"""Paths over midway states and over derivations, lifts between them and path decomposition"""

from .decompose import (
    decompose_par_s,
    decompose_par_u,
    decompose_rel,
    decompose_rel_s,
    decompose_res,
)
from .lifts import derivations_of, lifts
from .literal import parse_lasso
from .states import (
    FinitePath,
    Lasso,
    MalformedPath,
    Mid,
    Path,
    SState,
    UState,
    first_process,
    hat,
    hat_state,
    path_to_dict,
    render_path,
    render_state,
    rotate,
    suffix_classes,
    transitions,
)
from .validate import validate_s_path, validate_u_path

__all__ = [
    'FinitePath',
    'Lasso',
    'MalformedPath',
    'Mid',
    'Path',
    'SState',
    'UState',
    'decompose_par_s',
    'decompose_par_u',
    'decompose_rel',
    'decompose_rel_s',
    'decompose_res',
    'derivations_of',
    'first_process',
    'hat',
    'hat_state',
    'lifts',
    'parse_lasso',
    'path_to_dict',
    'render_path',
    'render_state',
    'rotate',
    'suffix_classes',
    'transitions',
    'validate_s_path',
    'validate_u_path',
]
