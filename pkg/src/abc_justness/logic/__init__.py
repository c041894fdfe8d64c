"""Linear temporal logic over transition labels, abstract transitions and their enabledness"""

from .evaluate import AtomLevelMismatch, Evaluator, eval_ltl
from .ltl import (
    TRUE,
    Always,
    And,
    AtomEn,
    AtomLabel,
    AtomNu,
    Eventually,
    FairnessSpec,
    Implies,
    LtlFormula,
    LtlSyntaxError,
    LtlTrue,
    Next,
    Not,
    Or,
    Until,
    closure,
    is_label_only,
    load_fairness,
    parse_ltl,
    show_ltl,
)

__all__ = [
    'TRUE',
    'Always',
    'And',
    'AtomEn',
    'AtomLabel',
    'AtomLevelMismatch',
    'AtomNu',
    'Evaluator',
    'Eventually',
    'FairnessSpec',
    'Implies',
    'LtlFormula',
    'LtlSyntaxError',
    'LtlTrue',
    'Next',
    'Not',
    'Or',
    'Until',
    'closure',
    'eval_ltl',
    'is_label_only',
    'load_fairness',
    'parse_ltl',
    'show_ltl',
]
