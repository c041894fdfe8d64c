import json

import pytest

from abc_justness.cli import EXIT_FALSE, EXIT_INPUT, EXIT_TRUE, EXIT_UNKNOWN, run


def test_parse(capsys):
    """Test printing a bundled system back in normal form."""
    assert run(['parse', 'ex5']) == EXIT_TRUE
    assert 'init b!.0 | (b?.0 + c.0)' in capsys.readouterr().out


def test_lts_formats(capsys):
    """Test the DOT and JSON renderings of the reachable graph."""
    assert run(['lts', 'nil']) == EXIT_TRUE
    assert 'start -> s0' in capsys.readouterr().out

    assert run(['lts', 'chain', '--format', 'json']) == EXIT_TRUE
    graph = json.loads(capsys.readouterr().out)
    assert graph['states'] == ['b1!.b2!.0', 'b2!.0', '0']
    assert [edge['label'] for edge in graph['edges']] == ['b1!', 'b2!']
    assert graph['init'] == 0


@pytest.mark.parametrize(
    'name,status,text',
    [
        ('fig1b', EXIT_FALSE, 'FAILS on complete path'),
        ('fig1b_fair', EXIT_TRUE, 'HOLDS up to stem 8'),
        ('fig1c', EXIT_TRUE, 'HOLDS up to stem 8, cycle 8'),
    ],
)
def test_check(capsys, name: str, status: int, text: str):
    """Test checking a property, with the bundled fairness file where there is one."""
    assert run(['check', name, '--ltl', 'G(<a> => F <d!>)']) == status
    assert text in capsys.readouterr().out


def test_check_counterexample_json(capsys):
    """Test the JSON verdict of a failing property."""
    argv = ['check', 'fig1b', '--ltl', 'G(<a> => F <d!>)', '--format', 'json']
    assert run(argv) == EXIT_FALSE
    verdict = json.loads(capsys.readouterr().out)
    assert verdict['status'] == 'fails'
    assert verdict['counterexample']['text'] == 'P -a-> ( Q -tau-> )^w'


def test_just(capsys):
    """Test the justness verdicts of both checkers on a path literal."""
    assert run(['just', 'C', '0 ; 0 -c-> 0']) == EXIT_FALSE
    out = capsys.readouterr().out
    assert 'UNJUST (def1' in out
    assert 'UNJUST (thm3-lift' in out

    assert run(['just', 'B', '0 ; 0 -c-> 0', '--method', 'def1']) == EXIT_TRUE
    assert '\nJUST (def1' in capsys.readouterr().out


def test_just_on_derivation_path(capsys):
    """Test justness of a loop written with rendered derivations."""
    argv = ['just', 'CB', '0 ; 0 -[(C:<c>C)|B]-> 0', '--method', 'thm3-lift']
    assert run(argv) == EXIT_FALSE
    assert 'UNJUST (thm3-lift' in capsys.readouterr().out

    argv = ['just', 'CB', '0 ; 0 -[C|(B:(<c>B+b!.0))]-> 0', '--method', 'def1']
    assert run(argv) == EXIT_TRUE
    assert '\nJUST (def1' in capsys.readouterr().out


def test_lassos(capsys):
    """Test listing complete paths and the message when there are none."""
    assert run(['lassos', 'chain']) == EXIT_TRUE
    assert capsys.readouterr().out == 'b1!.b2!.0 -b1!-> b2!.0 -b2!-> 0\n'

    assert run(['lassos', 'chain', '--finlen', '1']) == EXIT_TRUE
    assert capsys.readouterr().out == 'no complete paths within bounds\n'


@pytest.mark.parametrize(
    'left,right,status',
    [('a.0 + a.0', 'a.0', EXIT_TRUE), ('a.0', 'b!.0', EXIT_FALSE)],
)
def test_bisim(capsys, left: str, right: str, status: int):
    """Test comparing two expressions in the context of a specification."""
    assert run(['bisim', 'nil', left, right]) == status
    assert capsys.readouterr().out == ('true\n' if status == EXIT_TRUE else 'false\n')


def test_conc(capsys):
    """Test deciding concurrency of derivations given by name."""
    assert run(['conc', 'C', '(C:<c>C)|b!.0', 'C|<b!>0']) == EXIT_TRUE
    assert capsys.readouterr().out == 'true\n'
    assert run(['conc', 'ex5', 'b!.0|(b?.0+<c>0)', '<b!>0|(<b?>0+c.0)']) == EXIT_FALSE
    assert run(['conc', 'C', '(C:<c>C)|b!.0', 'nothing']) == EXIT_INPUT


def test_demo_scheduler(capsys):
    """Test that the scheduler passes its checks at small bounds."""
    assert run(['demo-scheduler', '--stem', '4', '--cycle', '6', '--finlen', '6']) == EXIT_TRUE
    out = capsys.readouterr().out
    assert out.count('PASS') == 3


@pytest.mark.parametrize(
    'argv',
    [
        ['parse', 'no_such_system.abc'],
        ['check', 'C', '--ltl', '<a> &'],
        ['check', 'C', '--ltl', 'F <z>'],
        ['lts', 'C', '--max-states', '0'],
        ['just', 'C', '0 -z-> 1'],
    ],
)
def test_input_errors(argv: list[str]):
    """Test that unusable input gives the input error status."""
    assert run(argv) == EXIT_INPUT


def test_state_bound(capsys):
    """Test that hitting the state bound is an unknown answer."""
    assert run(['lts', 'CB', '--max-states', '1']) == EXIT_UNKNOWN
    assert capsys.readouterr().out == ''
