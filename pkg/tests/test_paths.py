import pytest

from abc_justness.corpus import load_corpus
from abc_justness.paths import (
    FinitePath,
    Lasso,
    MalformedPath,
    Mid,
    decompose_par_s,
    decompose_par_u,
    decompose_rel,
    decompose_rel_s,
    decompose_res,
    derivations_of,
    first_process,
    hat,
    lifts,
    parse_lasso,
    path_to_dict,
    render_path,
    rotate,
    suffix_classes,
    transitions,
    validate_s_path,
    validate_u_path,
)
from abc_justness.sos import PrefixD, RecD, reachable, render
from abc_justness.syntax import NIL, TAU, Agent, Broadcast, Handshake, Prefix, parse_spec

A = Agent('A')
C_LOOP = Mid(A, Handshake('c'), A)


def _loop_spec():
    return parse_spec('agent A = c.A\ninit A')


def _graph(name: str):
    spec = load_corpus(name)
    return spec, reachable(spec.init, spec)


def test_parse_lasso():
    """Test reading a lasso over the state indices of a graph."""
    spec, graph = _graph('fig1c')
    path = parse_lasso('0 -a-> 1 -tau-> 2 ; 2 -tau-> 2', graph)
    assert isinstance(path, Lasso)
    assert path.stem[0] == spec.init
    assert [state.label for state in transitions(path)] == [Handshake('a'), TAU, TAU]
    assert path.cycle == (graph.states[2], Mid(graph.states[2], TAU, graph.states[2]))
    assert first_process(path) == spec.init


def test_parse_finite_path():
    """Test that a literal without a cycle is a finite path."""
    spec, graph = _graph('fig1a')
    path = parse_lasso('0 -a-> 1', graph)
    after_a = graph.states[1]
    assert path == FinitePath((spec.init, Mid(spec.init, Handshake('a'), after_a), after_a))
    assert path.last == after_a


def test_parse_lasso_pins_derivations():
    """Test reading a path of derivations from rendered derivation steps."""
    spec, graph = _graph('CB')
    by_c = parse_lasso('0 ; 0 -[(C:<c>C)|B]-> 0', graph)
    by_b = parse_lasso('0 ; 0 -[ C|(B:(<c>B+b!.0)) ]-> 0', graph)
    assert render(by_c.cycle[1]) == '(C:<c>C)|B'
    assert render(by_b.cycle[1]) == 'C|(B:(<c>B+b!.0))'
    assert lifts(by_c, 2, spec) == [by_c]
    assert hat(by_b) == parse_lasso('0 ; 0 -c-> 0', graph)
    assert validate_u_path(by_c, spec) == by_c
    with pytest.raises(MalformedPath):
        _ = parse_lasso('0 ; 0 -[C|B]-> 0', graph)


@pytest.mark.parametrize(
    'text',
    [
        '0 -a->',
        '0 -b-> 1',
        '9',
        '0 ; 1 -tau-> 1',
        '0 ; 0',
        '0 -a-> 1 ; 1 -tau-> 2',
        '0 -a-> 1 ;; 1',
    ],
)
def test_parse_lasso_errors(text: str):
    """Test that literals naming no path of the graph are rejected."""
    _, graph = _graph('fig1c')
    with pytest.raises(MalformedPath):
        _ = parse_lasso(text, graph)


def test_render_path():
    """Test the one-line rendering of a lasso."""
    _, graph = _graph('fig1c')
    path = parse_lasso('0 -a-> 1 -tau-> 2 ; 2 -tau-> 2', graph)
    assert render_path(path) == 'a.tau.d!.0 | T -a-> tau.d!.0 | T -tau-> ( d!.0 | T -tau-> )^w'
    assert path_to_dict(path) == {
        'kind': 'lasso',
        'stem': ['a.tau.d!.0 | T', '-a->', 'tau.d!.0 | T', '-tau->'],
        'cycle': ['d!.0 | T', '-tau->'],
        'text': render_path(path),
    }


def test_render_finite_path():
    """Test the rendering of a finite path."""
    spec = load_corpus('nil')
    path = parse_lasso('0', reachable(spec.init, spec))
    assert render_path(path) == '0'
    assert path_to_dict(path) == {'kind': 'finite', 'states': ['0'], 'text': '0'}


def test_normalized():
    """Test that the canonical lasso has a primitive cycle and the shortest stem."""
    doubled = Lasso((A, C_LOOP), (A, C_LOOP, A, C_LOOP))
    assert doubled.normalized() == Lasso((), (A, C_LOOP))
    assert Lasso((), (A, C_LOOP)).normalized() == Lasso((), (A, C_LOOP))


@pytest.mark.parametrize(
    'build',
    [
        lambda: FinitePath(()),
        lambda: FinitePath((C_LOOP,)),
        lambda: FinitePath((A, A)),
        lambda: FinitePath((A, C_LOOP, C_LOOP, A)),
        lambda: FinitePath((NIL, C_LOOP, A)),
        lambda: Lasso((), ()),
        lambda: Lasso((), (A,)),
        lambda: Lasso((), (A, Mid(A, Handshake('c'), NIL))),
        lambda: Lasso((NIL,), (A, C_LOOP)),
    ],
)
def test_malformed_paths(build):
    """Test that sequences of states that are not paths cannot be built."""
    with pytest.raises(MalformedPath):
        build()


def test_suffix_classes():
    """Test that a lasso has one suffix per stem state and per cycle rotation."""
    _, graph = _graph('fig1c')
    path = parse_lasso('0 -a-> 1 -tau-> 2 ; 2 -tau-> 2', graph)
    suffixes = suffix_classes(path)
    assert len(suffixes) == len(path.stem) + len(path.cycle) == 6
    assert suffixes[-1] == Lasso((), rotate(path.cycle, 1))
    assert len(suffix_classes(FinitePath((A,)))) == 1


def test_validate_s_path():
    """Test checking midway states against the operational semantics."""
    spec = _loop_spec()
    path = Lasso((), (A, C_LOOP))
    assert validate_s_path(path, spec) == path
    with pytest.raises(MalformedPath):
        _ = validate_s_path(Lasso((), (A, Mid(A, Handshake('d'), A))), spec)
    (lift,) = lifts(path, 1, spec)
    with pytest.raises(MalformedPath):
        _ = validate_s_path(lift, spec)


def test_validate_u_path():
    """Test checking derivation states against the operational semantics."""
    spec = _loop_spec()
    (lift,) = lifts(Lasso((), (A, C_LOOP)), 1, spec)
    assert validate_u_path(lift, spec) == lift
    with pytest.raises(MalformedPath):
        _ = validate_u_path(Lasso((), (A, C_LOOP)), spec)


def test_derivations_of():
    """Test listing the derivations behind a transition."""
    spec = load_corpus('CB')
    assert len(derivations_of(Mid(spec.init, Handshake('c'), spec.init), spec)) == 2
    assert derivations_of(Mid(spec.init, Handshake('d'), spec.init), spec) == []


@pytest.mark.parametrize('k,count', [(1, 2), (2, 4)])
def test_lift_counts(k: int, count: int):
    """Test the number of lifts of a loop with two derivations per round."""
    spec, graph = _graph('CB')
    path = parse_lasso('0 ; 0 -c-> 0', graph)
    found = lifts(path, k, spec)
    assert len(found) == count
    for lift in found:
        assert hat(lift).normalized() == path


def test_lifts_of_finite_path():
    """Test that a finite path has one lift per choice of derivations."""
    spec, graph = _graph('AC')
    assert len(lifts(parse_lasso('0 -tau-> 0', graph), 1, spec)) == 2
    spec, graph = _graph('fig1a')
    assert len(lifts(parse_lasso('0 -a-> 1', graph), 1, spec)) == 1


def test_lifts_errors():
    """Test that lifting needs a positive period and real transitions."""
    spec = _loop_spec()
    with pytest.raises(ValueError):
        _ = lifts(Lasso((), (A, C_LOOP)), 0, spec)
    with pytest.raises(MalformedPath):
        _ = lifts(Lasso((), (A, Mid(A, Handshake('d'), A))), 1, spec)


def test_decompose_par_u():
    """Test splitting a path of derivations into its component paths."""
    spec, graph = _graph('C')
    (lift,) = lifts(parse_lasso('0 ; 0 -c-> 0', graph), 1, spec)
    c_agent = Agent('C')
    left, right = decompose_par_u(lift)
    assert left == Lasso((), (c_agent, RecD('C', PrefixD(Handshake('c'), c_agent))))
    assert right == FinitePath((Prefix(Broadcast('b', '!'), NIL),))


def test_decompose_par_u_both_move():
    """Test that each component keeps the steps it takes part in."""
    spec, graph = _graph('C')
    (lift,) = lifts(parse_lasso('0 -b!-> 1 ; 1 -c-> 1', graph), 1, spec)
    left, right = decompose_par_u(lift)
    send = Prefix(Broadcast('b', '!'), NIL)
    assert isinstance(left, Lasso)
    assert hat(right) == FinitePath((send, Mid(send, Broadcast('b', '!'), NIL), NIL))


def test_decompose_par_s():
    """Test splitting a path of midway states through its lifts."""
    spec, graph = _graph('C')
    c_agent = Agent('C')
    splits = decompose_par_s(parse_lasso('0 ; 0 -c-> 0', graph), spec)
    assert splits == [
        (
            Lasso((), (c_agent, Mid(c_agent, Handshake('c'), c_agent))),
            FinitePath((Prefix(Broadcast('b', '!'), NIL),)),
        )
    ]


def test_decompose_par_rejects_other_operators():
    """Test that only parallel compositions split."""
    with pytest.raises(MalformedPath):
        _ = decompose_par_u(Lasso((), (A, C_LOOP)))


def test_decompose_res():
    """Test stripping an outer restriction from a path."""
    spec = parse_spec('init (a.0)\\c')
    path = parse_lasso('0 -a-> 1', reachable(spec.init, spec))
    a_zero = Prefix(Handshake('a'), NIL)
    assert decompose_res(path) == FinitePath((a_zero, Mid(a_zero, Handshake('a'), NIL), NIL))
    (lift,) = lifts(path, 1, spec)
    assert decompose_res(lift) == FinitePath((a_zero, PrefixD(Handshake('a'), NIL), NIL))
    with pytest.raises(MalformedPath):
        _ = decompose_res(Lasso((), (A, C_LOOP)))


def test_decompose_rel():
    """Test stripping a relabelling from a path of derivations and, via lifts, a midway path."""
    spec = parse_spec('init (b!.0)[x/b]')
    path = parse_lasso('0 -x!-> 1', reachable(spec.init, spec))
    send = Prefix(Broadcast('b', '!'), NIL)
    with pytest.raises(MalformedPath):
        _ = decompose_rel(path)

    (lift,) = lifts(path, 1, spec)
    assert decompose_rel(lift) == FinitePath((send, PrefixD(Broadcast('b', '!'), NIL), NIL))
    stripped = FinitePath((send, Mid(send, Broadcast('b', '!'), NIL), NIL))
    assert decompose_rel_s(path, spec) == [stripped]
