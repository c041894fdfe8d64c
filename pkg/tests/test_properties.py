import itertools

import pytest

from abc_justness.checking import enumerate_finite_paths, enumerate_lassos
from abc_justness.concurrency import (
    AParL,
    AParR,
    ARel,
    ARes,
    ASync,
    abstract_of,
    candidate_abstract_transitions,
    concurrent,
    concurrent_oneway,
    enabled,
    equiv,
    has_abstract_transition,
    occurs,
)
from abc_justness.corpus import corpus_names, load_corpus
from abc_justness.justness import Def1Checker, LiftChecker, progressing
from abc_justness.sos import (
    ParL,
    ParR,
    RecD,
    RelD,
    ResD,
    SumL,
    SumR,
    Sync,
    compose,
    is_derivation,
    reachable,
    step_original,
)
from abc_justness.syntax import (
    Choice,
    Handshake,
    Par,
    Relabel,
    Relabelling,
    Restrict,
    complement,
    is_receive,
    is_send,
)
from abc_justness.utils import dedupe

from .random_specs import random_spec

SMALL_SYSTEMS = [name for name in corpus_names() if name != 'scheduler']


def _derivations(spec):
    graph = reachable(spec.init, spec, 1000)
    return [step_original(state, spec) for state in graph.states]


def _systems():
    yield from (load_corpus(name) for name in SMALL_SYSTEMS)
    yield from (random_spec(seed) for seed in range(30))


def _components(process):
    yield process
    match process:
        case Par(left, right) | Choice(left, right):
            yield from _components(left)
            yield from _components(right)
        case Restrict(body, _) | Relabel(body, _):
            yield from _components(body)


def _states(spec):
    """Reachable processes, their operands and every derivation leaving one of them."""
    graph = reachable(spec.init, spec, 1000)
    processes = dedupe(p for state in graph.states for p in _components(state))
    return [*processes, *(d for p in processes for d in step_original(p, spec))]


def _enabled_in(state, spec):
    source = state.src if is_derivation(state) else state
    candidates = candidate_abstract_transitions(source, spec)
    return [nu for nu in candidates if enabled(nu, state, spec)]


@pytest.mark.parametrize('name', SMALL_SYSTEMS)
def test_justness_checkers_agree_on_lassos(name: str):
    """Test that both checkers agree on every small lasso."""
    spec = load_corpus(name)
    def1, lift = Def1Checker(spec, 2), LiftChecker(spec, 2)
    for lasso in enumerate_lassos(spec, 3, 4, 200):
        assert def1.verdict(lasso)['just'] == lift.verdict(lasso)['just'], lasso


@pytest.mark.parametrize('name', SMALL_SYSTEMS)
def test_finite_paths_are_just_iff_progressing(name: str):
    """Test that a finite path is just exactly when it is progressing."""
    spec = load_corpus(name)
    def1, lift = Def1Checker(spec), LiftChecker(spec)
    for path in enumerate_finite_paths(spec, 5, 200):
        expected = progressing(path, spec)
        assert def1.verdict(path)['just'] == expected
        assert lift.verdict(path)['just'] == expected


def test_concurrency_is_irreflexive():
    """Test that no derivation stays possible while itself happens."""
    for spec in _systems():
        for derivations in _derivations(spec):
            assert not any(concurrent_oneway(d, d) for d in derivations)


def test_concurrency_needs_a_common_source():
    """Test that related derivations always leave the same process."""
    for spec in _systems():
        edges = [d for derivations in _derivations(spec) for d in derivations]
        for chi, zeta in itertools.product(edges, repeat=2):
            if concurrent_oneway(chi, zeta):
                assert chi.src == zeta.src


def test_concurrent_derivations_are_not_equivalent():
    """Test that two derivations of one abstract transition are never concurrent."""
    for spec in _systems():
        for derivations in _derivations(spec):
            sends = [d for d in derivations if has_abstract_transition(d)]
            for chi, zeta in itertools.product(sends, repeat=2):
                if concurrent(chi, zeta):
                    assert not equiv(chi, zeta)


@pytest.mark.parametrize('name', SMALL_SYSTEMS)
def test_equivalence_is_closed_under_its_generating_clauses(name: str):
    """Test every way of building equivalent derivations on the derivations of a system."""
    spec = load_corpus(name)
    processes = reachable(spec.init, spec).states
    derivations = [d for p in processes for d in step_original(p, spec)]
    moves = [d for d in derivations if has_abstract_transition(d)]
    receives = [d for d in derivations if is_receive(d.label)]
    renaming = Relabelling.from_maps(handshake_map={'c': 'e'}, broadcast_map={'b': 'b2'})

    for chi in moves:
        for p, q in itertools.product(processes, repeat=2):
            assert equiv(ParL(chi, p), ParL(chi, q))
            assert equiv(ParR(p, chi), ParR(q, chi))
        if is_send(chi.label):
            for sigma in receives:
                if compose(chi.label, sigma.label) is not None:
                    assert equiv(Sync(chi, sigma), ParL(chi, sigma.src))
                    assert equiv(Sync(sigma, chi), ParR(sigma.src, chi))
        for p in processes:
            assert equiv(SumL(chi, p), chi)
            assert equiv(SumR(p, chi), chi)
        assert equiv(RecD('A', chi), chi)

    for chi, zeta in itertools.product(moves, repeat=2):
        if not equiv(chi, zeta):
            continue
        assert equiv(ResD(chi, 'z'), ResD(zeta, 'z'))
        assert equiv(RelD(chi, renaming), RelD(zeta, renaming))
        for p in processes:
            assert equiv(ParL(chi, p), ParL(zeta, p))
            assert equiv(ParR(p, chi), ParR(p, zeta))
        if isinstance(chi.label, Handshake):
            partners = [d for d in moves if d.label == complement(chi.label)]
            for sigma, xi in itertools.product(partners, repeat=2):
                if equiv(sigma, xi):
                    assert equiv(Sync(chi, sigma), Sync(zeta, xi))


def _check_parallel(state, left, right, spec):
    lefts, rights = _enabled_in(left, spec), _enabled_in(right, spec)
    assert all(enabled(AParL(nu), state, spec) for nu in lefts), state
    assert all(enabled(AParR(nu), state, spec) for nu in rights), state
    for nu1, nu2 in itertools.product(lefts, rights):
        if isinstance(nu1.label, Handshake) and nu2.label == complement(nu1.label):
            assert enabled(ASync(nu1, nu2), state, spec), state


def test_enabledness_carries_over_to_every_operator():
    """Test that a transition enabled in an operand is enabled around it, for every state."""
    for spec in _systems():
        for state in _states(spec):
            match state:
                case Par(left, right) | ParL(left, right) | ParR(left, right):
                    _check_parallel(state, left, right, spec)
                case Sync(left, right):
                    _check_parallel(state, left, right, spec)
                case Restrict(body, name) | ResD(body, name):
                    for nu in _enabled_in(body, spec):
                        if not (isinstance(nu.label, Handshake) and nu.label.name == name):
                            assert enabled(ARes(nu, name), state, spec), state
                case Relabel(body, f) | RelD(body, f):
                    nus = _enabled_in(body, spec)
                    assert all(enabled(ARel(nu, f), state, spec) for nu in nus), state


def test_opposite_components_are_concurrent():
    """Test that moves of the two sides of a parallel composition never interfere."""
    for spec in _systems():
        for derivations in _derivations(spec):
            left = [d for d in derivations if isinstance(d, ParL)]
            right = [d for d in derivations if isinstance(d, ParR)]
            for chi, zeta in itertools.product(left, right):
                assert concurrent(chi, zeta)


def test_enabled_during_step_survives_it():
    """Test that an abstract transition enabled during a step is enabled before and after."""
    for spec in _systems():
        for derivations in _derivations(spec):
            nus = {abstract_of(d) for d in derivations if has_abstract_transition(d)}
            for nu, zeta in itertools.product(nus, derivations):
                if enabled(nu, zeta, spec):
                    assert enabled(nu, zeta.src, spec)
                    assert enabled(nu, zeta.target, spec)


def test_occurring_transition_is_not_enabled_during_itself():
    """Test that an abstract transition is not enabled while one of its derivations happens."""
    for spec in _systems():
        for derivations in _derivations(spec):
            for zeta in derivations:
                if has_abstract_transition(zeta):
                    nu = abstract_of(zeta)
                    assert occurs(nu, zeta)
                    assert not enabled(nu, zeta, spec)
