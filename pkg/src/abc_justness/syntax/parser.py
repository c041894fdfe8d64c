import functools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from abc_justness.utils import detect_encoding

from .errors import (
    AbcSyntaxError,
    DuplicateAgent,
    NamespaceClash,
    RelabellingKindMismatch,
    UndeclaredName,
    UnguardedRecursion,
)
from .terms import (
    NIL,
    TAU,
    Agent,
    Broadcast,
    Choice,
    Handshake,
    Nil,
    Par,
    Prefix,
    Process,
    Relabel,
    Relabelling,
    Restrict,
    Spec,
)

logger = logging.getLogger(__name__)

_parser = Lark.open('grammar.lark', rel_to=__file__, parser='lalr', start=['start', 'process'])

BROADCAST, HANDSHAKE, AGENT = 'broadcast', 'handshake', 'agent'


@dataclass(frozen=True)
class _PendingRelabel:
    """Relabelling whose namespace is only known after the whole text is read."""

    body: object
    pairs: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class _Declaration:
    kind: str
    names: tuple[str, ...]


@dataclass(frozen=True)
class _Definition:
    name: str
    body: object
    line: int
    column: int


@v_args(inline=True)
class _SpecTransformer(Transformer):
    def start(self, *items):
        return list(items)

    def broadcast_declaration(self, *names: Token):
        return _Declaration(BROADCAST, tuple(map(str, names)))

    def handshake_declaration(self, *names: Token):
        return _Declaration(HANDSHAKE, tuple(map(str, names)))

    def definition(self, name: Token, body):
        return _Definition(str(name), body, name.line or 0, name.column or 0)

    def process(self, *alternatives):
        return functools.reduce(Choice, alternatives)

    def par(self, *components):
        return functools.reduce(Par, components)

    def prefix(self, action, body):
        return Prefix(action, body)

    def restrict(self, body, name: Token):
        return Restrict(body, str(name))

    def relabel(self, body, *pairs):
        return _PendingRelabel(body, tuple(pairs))

    def renaming(self, target: Token, source: Token):
        return str(target), str(source)

    def nil(self):
        return NIL

    def agent(self, name: Token):
        return Agent(str(name))

    def tau_action(self, _):
        return TAU

    def handshake_action(self, name: Token):
        return Handshake(str(name))

    def coname_action(self, name: Token):
        return Handshake(str(name), barred=True)

    def send_action(self, name: Token):
        return Broadcast(str(name), '!')

    def receive_action(self, name: Token):
        return Broadcast(str(name), '?')


def _syntax_error(error: UnexpectedInput) -> AbcSyntaxError:
    match error:
        case UnexpectedToken(token=token):
            if token.type == '$END':
                detail = 'unexpected end of input'
            else:
                detail = f'unexpected {str(token)!r}'
        case UnexpectedCharacters(char=char):
            detail = f'unexpected character {char!r}'
        case UnexpectedEOF():
            detail = 'unexpected end of input'
        case _:
            detail = 'invalid input'
    return AbcSyntaxError(detail, getattr(error, 'line', None), getattr(error, 'column', None))


def _usages(process) -> Iterator[tuple[str, str]]:
    """Yield ``(name, namespace)`` for every name occurrence with a known namespace."""
    match process:
        case Prefix(Broadcast(name, _), body):
            yield name, BROADCAST
            yield from _usages(body)
        case Prefix(Handshake(name, _), body):
            yield name, HANDSHAKE
            yield from _usages(body)
        case Prefix(_, body):
            yield from _usages(body)
        case Choice(left, right) | Par(left, right):
            yield from _usages(left)
            yield from _usages(right)
        case Restrict(body, name):
            yield name, HANDSHAKE
            yield from _usages(body)
        case _PendingRelabel(body, _):
            yield from _usages(body)
        case Agent(name):
            yield name, AGENT
        case _:
            pass


def _renamings(process) -> Iterator[tuple[str, str]]:
    match process:
        case Prefix(_, body) | Restrict(body, _):
            yield from _renamings(body)
        case Choice(left, right) | Par(left, right):
            yield from _renamings(left)
            yield from _renamings(right)
        case _PendingRelabel(body, pairs):
            yield from pairs
            yield from _renamings(body)
        case _:
            pass


def _unguarded(process) -> set[str]:
    match process:
        case Choice(left, right) | Par(left, right):
            return _unguarded(left) | _unguarded(right)
        case Restrict(body, _) | _PendingRelabel(body, _) | Relabel(body, _):
            return _unguarded(body)
        case Agent(name):
            return {name}
        case _:
            return set()


class _Namespaces:
    """Assignment of every name of a specification to exactly one namespace."""

    def __init__(self, declared: dict[str, set[str]]):
        self.kinds: dict[str, set[str]] = {name: set(kinds) for name, kinds in declared.items()}

    def add(self, name: str, kind: str):
        self.kinds.setdefault(name, set()).add(kind)

    def kind(self, name: str) -> str | None:
        kinds = self.kinds.get(name)
        if not kinds:
            return None
        if len(kinds) > 1:
            raise NamespaceClash(name, tuple(sorted(kinds)))
        return next(iter(kinds))

    def unify_renamings(self, pairs: list[tuple[str, str]]):
        # Names only seen inside relabellings take the namespace of their partner.
        changed = True
        while changed:
            changed = False
            for target, source in pairs:
                target_kind, source_kind = self.kind(target), self.kind(source)
                if target_kind == AGENT or source_kind == AGENT:
                    raise NamespaceClash(
                        target if target_kind == AGENT else source, (AGENT, 'action')
                    )
                if target_kind and source_kind and target_kind != source_kind:
                    raise RelabellingKindMismatch(target, source)
                if target_kind and not source_kind:
                    self.add(source, target_kind)
                    changed = True
                elif source_kind and not target_kind:
                    self.add(target, source_kind)
                    changed = True
        for target, source in pairs:
            if self.kind(source) is None:
                self.add(source, HANDSHAKE)
                self.add(target, HANDSHAKE)

    def names_of(self, kind: str) -> frozenset[str]:
        return frozenset(name for name in self.kinds if self.kind(name) == kind)


def _resolve(process, namespaces: _Namespaces) -> Process:
    match process:
        case Prefix(action, body):
            return Prefix(action, _resolve(body, namespaces))
        case Choice(left, right):
            return Choice(_resolve(left, namespaces), _resolve(right, namespaces))
        case Par(left, right):
            return Par(_resolve(left, namespaces), _resolve(right, namespaces))
        case Restrict(body, name):
            return Restrict(_resolve(body, namespaces), name)
        case _PendingRelabel(body, pairs):
            broadcast_map: dict[str, str] = {}
            handshake_map: dict[str, str] = {}
            for target, source in pairs:
                is_broadcast = namespaces.kind(source) == BROADCAST
                renaming = broadcast_map if is_broadcast else handshake_map
                if source in broadcast_map or source in handshake_map:
                    raise AbcSyntaxError(f'{source!r} is renamed twice in one relabelling')
                renaming[source] = target
            f = Relabelling.from_maps(broadcast_map, handshake_map)
            return Relabel(_resolve(body, namespaces), f)
        case Nil() | Agent():
            return process
    raise TypeError(f'Unexpected parse result {process!r}')


def _build_spec(
    declarations: list[_Declaration],
    definitions: list[_Definition],
    init,
    known: dict[str, set[str]] | None = None,
    known_env: dict[str, Process] | None = None,
) -> Spec:
    declared: dict[str, set[str]] = {name: set(kinds) for name, kinds in (known or {}).items()}
    for declaration in declarations:
        for name in declaration.names:
            declared.setdefault(name, set()).add(declaration.kind)

    env_names = set(known_env or {})
    for definition in definitions:
        if definition.name in env_names:
            raise DuplicateAgent(definition.name)
        env_names.add(definition.name)
        declared.setdefault(definition.name, set()).add(AGENT)

    namespaces = _Namespaces(declared)
    bodies = [definition.body for definition in definitions] + [init]
    for body in bodies:
        for name, kind in _usages(body):
            if kind == AGENT and name not in env_names:
                raise UndeclaredName(name, AGENT)
            namespaces.add(name, kind)
    namespaces.unify_renamings([pair for body in bodies for pair in _renamings(body)])
    for name in namespaces.kinds:
        namespaces.kind(name)

    for definition in definitions:
        if _unguarded(definition.body):
            raise UnguardedRecursion(definition.name)

    env = dict(known_env or {})
    env.update(
        (definition.name, _resolve(definition.body, namespaces)) for definition in definitions
    )
    spec = Spec(
        broadcast_names=namespaces.names_of(BROADCAST),
        handshake_names=namespaces.names_of(HANDSHAKE),
        env=env,
        init=_resolve(init, namespaces),
    )
    logger.debug(
        'Parsed specification with %d agents, %d broadcast and %d handshake names',
        len(env),
        len(spec.broadcast_names),
        len(spec.handshake_names),
    )
    return spec


def parse_spec(text: str) -> Spec:
    """
    Parse an ABC specification.

    Names that are not declared get the namespace implied by their use: ``b!``/``b?``
    make ``b`` a broadcast name, plain or co-name actions and restrictions make a
    handshake name. Names occurring only in relabellings inherit the namespace of
    their partner.

    Parameters
    ----------
    text
        Specification source

    Returns
    -------
    Spec
        Well-formed specification with guarded defining equations

    Raises
    ------
    AbcSyntaxError
        If the text does not match the grammar
    UndeclaredName
        If an agent identifier has no defining equation
    NamespaceClash
        If a name is used in two namespaces
    UnguardedRecursion
        If a defining body has an agent identifier outside every prefix
    RelabellingKindMismatch
        If a relabelling maps across namespaces

    Examples
    --------
    >>> spec = parse_spec('agent A = a.A + c.A\\ninit A')
    >>> spec.init
    Agent(name='A')
    """
    try:
        items = _SpecTransformer().transform(_parser.parse(text, start='start'))
    except UnexpectedInput as e:
        raise _syntax_error(e) from e

    *heading, init = items
    declarations = [item for item in heading if isinstance(item, _Declaration)]
    definitions = [item for item in heading if isinstance(item, _Definition)]
    return _build_spec(declarations, definitions, init)


def parse_process(text: str, spec: Spec) -> Spec:
    """
    Parse a process expression in the context of an existing specification.

    Returns
    -------
    Spec
        ``spec`` with the parsed expression as its initial process; alphabets are
        extended with any names the expression introduces.
    """
    try:
        process = _SpecTransformer().transform(_parser.parse(text, start='process'))
    except UnexpectedInput as e:
        raise _syntax_error(e) from e

    known: dict[str, set[str]] = {}
    for name in spec.broadcast_names:
        known.setdefault(name, set()).add(BROADCAST)
    for name in spec.handshake_names:
        known.setdefault(name, set()).add(HANDSHAKE)
    for name in spec.env:
        known.setdefault(name, set()).add(AGENT)
    return _build_spec([], [], process, known=known, known_env=dict(spec.env))


def read_spec_file(path: str | Path) -> Spec:
    """Read and parse a specification file, detecting its text encoding first."""
    path = Path(path)
    encoding = detect_encoding(path)
    with path.open(encoding=encoding) as spec_file:
        return parse_spec(spec_file.read())
