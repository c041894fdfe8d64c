# Golden verdicts on the bundled systems
# Path literals refer to state indices of the reachable graph, numbered in breadth-first
# discovery order with the derivations of each state sorted by name.

# System name -> list of (path literal, just)
GOLDEN_JUSTNESS: dict[str, list[tuple[str, bool]]] = {
    'nil': [('0', True)],
    'fig1a': [('0', True), ('0 -a-> 1', False), ('0 -a-> 1 -tau-> 2 -d!-> 3', True)],
    'fig1b': [('0 -a-> 1 ; 1 -tau-> 1', True), ('0 -a-> 1', False)],
    'fig1b_fair': [('0 -a-> 1 ; 1 -i!-> 1', True)],
    'fig1c': [
        ('0 ; 0 -tau-> 0', True),
        ('0 -a-> 1 ; 1 -tau-> 1', False),
        ('0 -a-> 1 -tau-> 2 ; 2 -tau-> 2', False),
        ('0 -a-> 1 -tau-> 2 -d!-> 3 ; 3 -tau-> 3', True),
    ],
    'A': [('0', True), ('0 ; 0 -c-> 0', True)],
    'AC': [
        ('0 ; 0 -tau-> 0', True),
        ('0 ; 0 -c-> 0', False),
        ("0 ; 0 -'c-> 0", True),
        ('0 -b!-> 1 ; 1 -c-> 1', True),
    ],
    'B': [('0 ; 0 -c-> 0', True), ('0 -b!-> 1', True)],
    'C': [('0 ; 0 -c-> 0', False), ('0 -b!-> 1 ; 1 -c-> 1', True)],
    'CB': [('0 ; 0 -c-> 0', True), ('0 -b!-> 1 ; 1 -c-> 1', True)],
    'bD': [('0 ; 0 -c-> 2 -e-> 0', False), ('0 -b!-> 1 ; 1 -c-> 3 -e-> 1', True)],
    'choice': [('0', True), ('0 -a-> 1', True)],
    'chain': [('0 -b1!-> 1', False), ('0 -b1!-> 1 -b2!-> 2', True)],
    'ex5': [
        ('0 -b!-> 1', True),
        ('0 -c-> 2', False),
        ('0 -c-> 2 -b!-> 1', True),
        ('0 -b?-> 2 -b!-> 1', True),
    ],
}

# (system, property, status, counterexample text or None); bundled fairness applies
GOLDEN_CHECKS: list[tuple[str, str, str, str | None]] = [
    ('fig1a', 'G(<a> => F <d!>)', 'holds', None),
    ('fig1b', 'G(<a> => F <d!>)', 'fails', 'P -a-> ( Q -tau-> )^w'),
    ('fig1b_fair', 'G(<a> => F <d!>)', 'holds', None),
    ('fig1c', 'G(<a> => F <d!>)', 'holds', None),
    ('choice', 'F <a>', 'fails', 'a.0 + c.0'),
    ('chain', 'F <b2!>', 'holds', None),
    ('A', 'G F <c>', 'fails', 'A'),
    ('C', 'F <b!>', 'holds', None),
    ('CB', 'F <b!>', 'fails', '( C | B -c-> )^w'),
    ('bD', 'F <b!>', 'holds', None),
    ('ex5', 'F <b!>', 'holds', None),
]

# System name -> number of complete paths within the default bounds
GOLDEN_COMPLETE_COUNTS: dict[str, int] = {
    'nil': 1,
    'chain': 1,
    'fig1a': 2,
    'fig1c': 2,
    'choice': 3,
}
