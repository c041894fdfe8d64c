class SpecError(ValueError):
    """Base class for malformed ABC specifications"""

    pass


class AbcSyntaxError(SpecError):
    """Exception raised when specification text does not match the grammar"""

    def __init__(self, detail: str, line: int | None = None, column: int | None = None):
        where = f' at line {line}, column {column}' if line is not None and line > 0 else ''
        super().__init__(f'Syntax error{where}: {detail}')
        self.detail: str = detail
        self.line: int | None = line
        self.column: int | None = column


class UndeclaredName(SpecError):
    """Exception raised when a name is used but never defined"""

    def __init__(self, name: str, kind: str):
        super().__init__(f'Undeclared {kind} name {name!r}')
        self.name: str = name
        self.kind: str = kind


class NamespaceClash(SpecError):
    """Exception raised when one name is registered in several namespaces"""

    def __init__(self, name: str, namespaces: tuple[str, ...]):
        super().__init__(f'Name {name!r} is used as {" and ".join(namespaces)}')
        self.name: str = name
        self.namespaces: tuple[str, ...] = namespaces


class UnguardedRecursion(SpecError):
    """Exception raised when an agent identifier occurs outside any prefix of a defining body"""

    def __init__(self, agent: str):
        super().__init__(f'Defining equation of {agent!r} is not guarded')
        self.agent: str = agent


class RelabellingKindMismatch(SpecError):
    """Exception raised when a relabelling maps a broadcast name to a handshake name or back"""

    def __init__(self, target: str, source: str):
        super().__init__(f'Relabelling {target}/{source} mixes broadcast and handshake names')
        self.target: str = target
        self.source: str = source


class DuplicateAgent(SpecError):
    """Exception raised when an agent identifier has two defining equations"""

    def __init__(self, agent: str):
        super().__init__(f'Agent {agent!r} is defined more than once')
        self.agent: str = agent


class NotAHandshake(ValueError):
    """Exception raised when a handshake-only operation receives another action"""

    def __init__(self, action: object):
        super().__init__(f'{action} is not a handshake action')
        self.action: object = action
