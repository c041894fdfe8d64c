import random

import pytest

from abc_justness.checking import (
    BoundedChecker,
    bisimilar,
    bisimulation_classes,
    check,
    enumerate_complete,
    enumerate_finite_paths,
    enumerate_lassos,
    simple_cycles,
)
from abc_justness.concurrency import abstract_of
from abc_justness.config import load_bounds
from abc_justness.corpus import load_corpus, load_corpus_fairness
from abc_justness.justness import complete
from abc_justness.logic import AtomEn, AtomLevelMismatch, eval_ltl, parse_ltl
from abc_justness.paths import FinitePath, Lasso, render_path, validate_s_path
from abc_justness.sos import StateBoundExceeded, reachable
from abc_justness.syntax import (
    NIL,
    Choice,
    Handshake,
    Par,
    Prefix,
    Process,
    Relabel,
    Relabelling,
    Restrict,
    parse_label,
    parse_process,
    parse_spec,
)

from .random_specs import BROADCASTS, HANDSHAKES, random_action, random_processes
from .test_corpus.golden_results import GOLDEN_CHECKS, GOLDEN_COMPLETE_COUNTS


@pytest.mark.parametrize('name,formula,status,text', GOLDEN_CHECKS)
def test_golden_checks(name: str, formula: str, status: str, text: str | None):
    """Test bounded checking of the pinned properties of the bundled systems."""
    spec = load_corpus(name)
    verdict = check(spec, parse_ltl(formula, spec), load_corpus_fairness(name))
    assert verdict['status'] == status
    assert verdict['bounds'] == load_bounds()
    if text is not None:
        assert verdict['counterexample']['text'] == text


FAILING = [(name, formula) for name, formula, status, _ in GOLDEN_CHECKS if status == 'fails']


@pytest.mark.parametrize('name,formula', FAILING)
def test_counterexample_is_a_violating_complete_path(name: str, formula: str):
    """Test that every counterexample is a complete path violating the property."""
    spec = load_corpus(name)
    fs = load_corpus_fairness(name)
    phi = parse_ltl(formula, spec)
    path = BoundedChecker(spec, fs).counterexample(phi)
    assert path is not None
    assert validate_s_path(path, spec) == path
    assert not eval_ltl(path, phi)
    assert complete(path, fs, spec)


def test_counterexample_respects_fairness():
    """Test that an unfair loop is not reported as a counterexample."""
    spec = load_corpus('fig1b_fair')
    phi = parse_ltl('G(<a> => F <d!>)', spec)
    assert BoundedChecker(spec).counterexample(phi) is not None
    assert BoundedChecker(spec, load_corpus_fairness('fig1b_fair')).counterexample(phi) is None


def test_check_bounds_are_reported():
    """Test that a verdict carries the bounds it was computed under."""
    spec = load_corpus('fig1c')
    bounds = load_bounds(stem=2, cycle=3)
    verdict = check(spec, parse_ltl('G(<a> => F <d!>)', spec), (), bounds)
    assert verdict == {'status': 'holds', 'bounds': bounds}


def test_checker_shares_cycles_between_properties():
    """Test deciding several properties with one checker."""
    spec = load_corpus('CB')
    checker = BoundedChecker(spec)
    assert checker.verdict(parse_ltl('F <b!>', spec))['status'] == 'fails'
    assert checker.verdict(parse_ltl('G !<tau>', spec))['status'] == 'holds'
    assert len(checker.cycles()) == 2
    assert checker.disagreements == []


def test_unjust_lasso_over_just_cycle_is_not_a_disagreement(monkeypatch):
    """Test that rejecting a lasso whose cycle is just still lets the property hold."""
    spec = load_corpus('fig1b')
    checker = BoundedChecker(spec)

    def cycles_only(path) -> bool:
        return not (isinstance(path, Lasso) and path.stem)

    monkeypatch.setattr(checker, 'is_just', cycles_only)
    assert checker.verdict(parse_ltl('F <d!>', spec)) == {
        'status': 'holds',
        'bounds': load_bounds(),
    }
    assert checker.disagreements == []


def test_check_rejects_abstract_transition_atoms():
    """Test that properties over midway states cannot mention abstract transitions."""
    spec = load_corpus('C')
    graph = reachable(spec.init, spec)
    nu = abstract_of(graph.edges[-1].derivation)
    with pytest.raises(AtomLevelMismatch):
        _ = check(spec, AtomEn(nu))


def test_check_state_bound():
    """Test that checking gives up when the state space is too large."""
    spec = load_corpus('CB')
    with pytest.raises(StateBoundExceeded):
        _ = check(spec, parse_ltl('F <b!>', spec), (), load_bounds(max_states=1))


@pytest.mark.parametrize('name,count', GOLDEN_COMPLETE_COUNTS.items())
def test_enumerate_complete_counts(name: str, count: int):
    """Test the number of complete paths of small bundled systems."""
    paths = list(enumerate_complete(load_corpus(name)))
    assert len(paths) == count


def test_enumerate_complete_order():
    """Test that finite complete paths come before lassos."""
    spec = load_corpus('choice')
    texts = [render_path(path) for path in enumerate_complete(spec)]
    assert texts == ['a.0 + c.0', 'a.0 + c.0 -a-> 0', 'a.0 + c.0 -c-> 0']
    kinds = [type(path) for path in enumerate_complete(load_corpus('fig1c'))]
    assert kinds == [Lasso, Lasso]


def test_enumerate_finite_paths():
    """Test listing finite paths up to a length."""
    spec = load_corpus('chain')
    assert [len(path.states) for path in enumerate_finite_paths(spec, 5)] == [1, 3, 5]
    assert list(enumerate_finite_paths(spec, 0)) == [FinitePath((spec.init,))]
    with pytest.raises(ValueError):
        _ = list(enumerate_finite_paths(spec, -1))


def test_enumerate_lassos():
    """Test listing simple lassos within stem and cycle bounds."""
    spec = load_corpus('fig1c')
    found = list(enumerate_lassos(spec, 8, 8))
    assert len(found) == 4
    assert all(len(lasso.cycle) == 2 for lasso in found)
    assert sorted(len(lasso.stem) for lasso in enumerate_lassos(spec, 1, 8)) == [0, 2]
    assert list(enumerate_lassos(load_corpus('chain'), 8, 8)) == []


def test_simple_cycles():
    """Test that each simple cycle is found once, from its smallest state."""
    spec = load_corpus('bD')
    graph = reachable(spec.init, spec)
    cycles = list(simple_cycles(graph, 8))
    assert [root for root, _ in cycles] == [0, 1]
    assert all(len(steps) == 2 for _, steps in cycles)
    assert list(simple_cycles(graph, 1)) == []


def test_bisimilar():
    """Test strong bisimilarity of small processes."""
    spec = parse_spec('init 0')

    def process(text: str) -> Process:
        return parse_process(text, spec).init

    assert bisimilar(process('a.0 + a.0'), process('a.0'), spec)
    assert bisimilar(process('a.0 | 0'), process('a.0'), spec)
    assert not bisimilar(process('a.0'), process('b!.0'), spec)
    assert not bisimilar(process('a.(b.0 + c.0)'), process('a.b.0 + a.c.0'), spec)
    assert bisimilar(process('a.0 | b.0'), process('a.b.0 + b.a.0'), spec)


def test_bisimulation_classes():
    """Test partitioning the states reachable from several processes."""
    spec = parse_spec('init 0')
    choice, prefix = parse_process('a.0 + a.0', spec).init, parse_process('a.0', spec).init
    assert bisimulation_classes([choice, prefix], spec) == [[choice, prefix], [NIL]]


@pytest.mark.parametrize('seed', range(50))
def test_parallel_composition_is_associative(seed: int):
    """Test that regrouping a parallel composition gives a bisimilar process."""
    spec, (p, q, r) = random_processes(seed, 3)
    assert bisimilar(Par(Par(p, q), r), Par(p, Par(q, r)), spec)
    assert bisimilar(Choice(Choice(p, q), r), Choice(p, Choice(q, r)), spec)
    assert bisimilar(Par(p, q), Par(q, p), spec)


def _context(rng: random.Random, hole: Process, other: Process) -> Process:
    match rng.randrange(6):
        case 0:
            return Par(hole, other)
        case 1:
            return Par(other, hole)
        case 2:
            return Choice(hole, other)
        case 3:
            return Restrict(hole, rng.choice(HANDSHAKES))
        case 4:
            x, y = rng.sample(BROADCASTS, 2)
            return Relabel(hole, Relabelling.from_maps(broadcast_map={x: y, y: x}))
        case _:
            return Prefix(parse_label(random_action(rng)), hole)


@pytest.mark.parametrize('seed', range(50))
def test_bisimilarity_is_a_congruence(seed: int):
    """Test that bisimilar processes stay bisimilar in every operator context."""
    spec, (p, other) = random_processes(seed, 2)
    q = Choice(p, p) if seed % 2 else Par(p, NIL)
    assert bisimilar(p, q, spec)
    left = _context(random.Random(seed), p, other)
    right = _context(random.Random(seed), q, other)
    assert bisimilar(left, right, spec)


def test_bisimilar_ignores_handshake_names_elsewhere():
    """Test that a restricted handshake makes its branch inert."""
    spec = parse_spec('init 0')
    restricted = parse_process('(c.0 + a.0)\\c', spec).init
    plain = Restrict(Prefix(Handshake('a'), NIL), 'c')
    assert bisimilar(restricted, plain, spec)
