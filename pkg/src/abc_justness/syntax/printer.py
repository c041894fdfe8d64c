from .terms import Agent, Choice, Nil, Par, Prefix, Process, Relabel, Restrict, Spec

# Binding levels, loosest first. A subterm printed where a tighter level is
# required gets parentheses.
CHOICE, PAR, PREFIX, POSTFIX, ATOM = range(5)


def parenthesize(text: str, level: int, required: int) -> str:
    return f'({text})' if level < required else text


def process_level(process: Process) -> int:
    match process:
        case Choice():
            return CHOICE
        case Par():
            return PAR
        case Prefix():
            return PREFIX
        case Restrict() | Relabel():
            return POSTFIX
        case _:
            return ATOM


def show(process: Process, required: int = CHOICE) -> str:
    return parenthesize(_layout(process), process_level(process), required)


def _layout(process: Process) -> str:
    match process:
        case Nil():
            return '0'
        case Agent(name):
            return name
        case Prefix(action, body):
            return f'{action}.{show(body, PREFIX)}'
        case Choice(left, right):
            return f'{show(left, CHOICE)} + {show(right, PAR)}'
        case Par(left, right):
            return f'{show(left, PAR)} | {show(right, PREFIX)}'
        case Restrict(body, name):
            return f'{show(body, POSTFIX)}\\{name}'
        case Relabel(body, f):
            return f'{show(body, POSTFIX)}{f}'
    raise TypeError(f'Not a process: {process!r}')


def pretty_print(process: Process) -> str:
    """
    Render a process in the concrete syntax accepted by the parser.

    Choice and parallel composition associate to the left, so only right-nested
    operands of the same operator are parenthesised.

    Examples
    --------
    >>> from abc_justness.syntax.terms import NIL, Broadcast, Handshake
    >>> pretty_print(Par(Prefix(Broadcast('b', '!'), NIL), Choice(Prefix(Broadcast('b', '?'), NIL), Prefix(Handshake('c'), NIL))))
    'b!.0 | (b?.0 + c.0)'
    """
    return show(process)


def pretty_print_spec(spec: Spec) -> str:
    lines = []
    if spec.broadcast_names:
        lines.append('broadcast ' + ' '.join(sorted(spec.broadcast_names)) + ';')
    if spec.handshake_names:
        lines.append('handshake ' + ' '.join(sorted(spec.handshake_names)) + ';')
    lines.extend(f'agent {name} = {pretty_print(body)}' for name, body in spec.env.items())
    lines.append(f'init {pretty_print(spec.init)}')
    return '\n'.join(lines) + '\n'
