"""Abstract syntax, concrete grammar and printer of ABC specifications"""

from .errors import (
    AbcSyntaxError,
    DuplicateAgent,
    NamespaceClash,
    NotAHandshake,
    RelabellingKindMismatch,
    SpecError,
    UndeclaredName,
    UnguardedRecursion,
)
from .parser import parse_process, parse_spec, read_spec_file
from .printer import pretty_print, pretty_print_spec
from .terms import (
    NIL,
    TAU,
    Action,
    Agent,
    Broadcast,
    Choice,
    Discard,
    Handshake,
    Label,
    Nil,
    Par,
    Prefix,
    Process,
    Relabel,
    Relabelling,
    Restrict,
    Spec,
    Tau,
    apply_relabelling,
    complement,
    is_process,
    is_receive,
    is_send,
    parse_label,
    sort,
)

__all__ = [
    'NIL',
    'TAU',
    'AbcSyntaxError',
    'Action',
    'Agent',
    'Broadcast',
    'Choice',
    'Discard',
    'DuplicateAgent',
    'Handshake',
    'Label',
    'NamespaceClash',
    'Nil',
    'NotAHandshake',
    'Par',
    'Prefix',
    'Process',
    'Relabel',
    'RelabellingKindMismatch',
    'Relabelling',
    'Restrict',
    'Spec',
    'SpecError',
    'Tau',
    'UndeclaredName',
    'UnguardedRecursion',
    'apply_relabelling',
    'complement',
    'is_process',
    'is_receive',
    'is_send',
    'parse_label',
    'parse_process',
    'parse_spec',
    'pretty_print',
    'pretty_print_spec',
    'read_spec_file',
    'sort',
]
