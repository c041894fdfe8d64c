from dataclasses import dataclass

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput

from abc_justness.sos.derivations import render
from abc_justness.sos.lts import LtsGraph
from abc_justness.syntax.printer import pretty_print
from abc_justness.syntax.terms import Process, parse_label

from .states import FinitePath, Lasso, MalformedPath, Mid, Path

_grammar = r"""
start: chain (";" chain)?
chain: STATE ((STEP | DERIVATION) STATE)*

STATE: INT
STEP: /-'?[A-Za-z][A-Za-z0-9_]*[!?]?->/
DERIVATION: /-\[(?:[^\[\]]|\[[^\[\]]*\])+\]->/

%import common.INT
%import common.WS
%ignore WS
"""

_parser = Lark(_grammar, parser='lalr')


@dataclass(frozen=True)
class _Rendered:
    text: str


def _compact(text: str) -> str:
    return ''.join(text.split())


@v_args(inline=True)
class _ChainTransformer(Transformer):
    def start(self, *chains):
        return list(chains)

    def chain(self, *tokens: Token):
        items = []
        for t in tokens:
            match t.type:
                case 'STATE':
                    items.append(int(t))
                case 'STEP':
                    items.append(parse_label(t[1:-2]))
                case _:
                    items.append(_Rendered(_compact(t[2:-3])))
        return items


def _resolve_step(item, src: Process, target: Process, graph: LtsGraph):
    edges = [
        edge for edge in graph.outgoing[graph.index[src]] if graph.states[edge.target] == target
    ]
    if isinstance(item, _Rendered):
        for edge in edges:
            if _compact(render(edge.derivation)) == item.text:
                return edge.derivation
        raise MalformedPath(
            f'{pretty_print(src)} has no derivation {item.text} to {pretty_print(target)}'
        )

    if not any(edge.label == item for edge in edges):
        raise MalformedPath(
            f'{pretty_print(src)} has no {item}-transition to {pretty_print(target)}'
        )
    return Mid(src, item, target)


def _resolve_chain(chain: list, graph: LtsGraph) -> list:
    states: list = []
    for i, item in enumerate(chain):
        if i % 2 == 0:
            if not 0 <= item < len(graph.states):
                raise MalformedPath(f'no state with index {item}')
            states.append(graph.states[item])
        else:
            states.append(item)

    resolved: list = []
    for i, item in enumerate(states):
        if i % 2 == 0:
            resolved.append(item)
        else:
            resolved.append(_resolve_step(item, states[i - 1], states[i + 1], graph))
    return resolved


def parse_lasso(text: str, graph: LtsGraph) -> Path:
    """
    Read a path written over the state indices of a graph.

    A chain is ``i -l-> j -l-> k ...``. ``stem ; cycle`` denotes a lasso: the stem
    chain ends at the first state of the cycle chain, which starts and ends at the
    same state. Without ``;`` the chain is a finite path.

    A step written ``-[d]->``, with ``d`` the rendering of a derivation, pins that
    derivation; a chain of such steps is a path of derivations.

    Parameters
    ----------
    text
        Path literal such as ``"0 -a-> 1 ; 1 -tau-> 1"``
    graph
        Graph whose state indices the literal refers to

    Raises
    ------
    MalformedPath
        If the literal does not parse or names a transition that does not exist

    Examples
    --------
    >>> from abc_justness.sos.lts import reachable
    >>> from abc_justness.syntax import parse_spec
    >>> spec = parse_spec('agent A = c.A\\ninit A')
    >>> parse_lasso('0 ; 0 -c-> 0', reachable(spec.init, spec)).cycle[0]
    Agent(name='A')
    >>> parse_lasso('0 ; 0 -[A:<c>A]-> 0', reachable(spec.init, spec)).cycle[1].agent
    'A'
    """
    try:
        chains = _ChainTransformer().transform(_parser.parse(text))
    except UnexpectedInput as e:
        raise MalformedPath(f'cannot read path literal at column {e.column}') from e

    resolved = [_resolve_chain(chain, graph) for chain in chains]
    if len(resolved) == 1:
        return FinitePath(tuple(resolved[0]))

    stem, cycle = resolved
    if len(cycle) < 3:
        raise MalformedPath('the cycle chain needs at least one transition')
    if stem[-1] != cycle[0] or cycle[-1] != cycle[0]:
        raise MalformedPath('the stem must end where the cycle starts and the cycle must close')
    return Lasso(tuple(stem[:-1]), tuple(cycle[:-1]))
