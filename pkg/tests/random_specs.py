"""
Seeded random ABC specifications for property tests.

Every specification declares the broadcast names ``b1 b2 b3`` and the handshake names
``c1 c2 c3``, defines two guarded sequential agents ``X`` and ``Y`` and runs one to three
of them in parallel, each possibly restricted or relabelled. A relabelling either swaps two
names or renames one name to another, merging the two.
"""

import random

from abc_justness.syntax import Process, Spec, parse_process, parse_spec

BROADCASTS = ('b1', 'b2', 'b3')
HANDSHAKES = ('c1', 'c2', 'c3')
AGENTS = ('X', 'Y')


def random_action(rng: random.Random) -> str:
    match rng.randrange(5):
        case 0:
            return 'tau'
        case 1:
            return rng.choice(HANDSHAKES)
        case 2:
            return "'" + rng.choice(HANDSHAKES)
        case 3:
            return rng.choice(BROADCASTS) + '!'
        case _:
            return rng.choice(BROADCASTS) + '?'


def _continuation(rng: random.Random, depth: int) -> str:
    if depth <= 1 or rng.random() < 0.4:
        return rng.choice(['0', *AGENTS])
    return f'{random_action(rng)}.{_continuation(rng, depth - 1)}'


def random_body(rng: random.Random, depth: int = 3) -> str:
    count = rng.randint(1, 2)
    branches = [f'{random_action(rng)}.{_continuation(rng, depth - 1)}' for _ in range(count)]
    return ' + '.join(branches)


def random_component(rng: random.Random) -> str:
    agent = rng.choice(AGENTS)
    match rng.randrange(6):
        case 0:
            return f'{agent}\\{rng.choice(HANDSHAKES)}'
        case 1:
            x, y = rng.sample(HANDSHAKES, 2)
            return f'{agent}[{x}/{y},{y}/{x}]'
        case 2:
            x, y = rng.sample(BROADCASTS, 2)
            return f'{agent}[{x}/{y},{y}/{x}]'
        case 3:
            x, y = rng.sample(BROADCASTS, 2)
            return f'{agent}[{x}/{y}]'
        case 4:
            x, y = rng.sample(HANDSHAKES, 2)
            return f'{agent}[{x}/{y}]'
        case _:
            return agent


def random_spec_text(seed: int) -> str:
    rng = random.Random(seed)
    lines = ['broadcast b1 b2 b3;', 'handshake c1 c2 c3;']
    lines += [f'agent {name} = {random_body(rng)}' for name in AGENTS]
    components = [random_component(rng) for _ in range(rng.randint(1, 3))]
    lines.append('init ' + ' | '.join(components))
    return '\n'.join(lines) + '\n'


def random_spec(seed: int) -> Spec:
    return parse_spec(random_spec_text(seed))


def random_processes(seed: int, count: int) -> tuple[Spec, list[Process]]:
    """A random specification and ``count`` random components over its agents."""
    spec = random_spec(seed)
    rng = random.Random(seed + 1_000_003)
    return spec, [parse_process(random_component(rng), spec).init for _ in range(count)]
