"""Small ABC systems bundled for demonstrations and regression tests"""

import functools
import pathlib
from typing import TypedDict

import yaml

from abc_justness.logic.ltl import FairnessSpec, load_fairness
from abc_justness.syntax.parser import read_spec_file
from abc_justness.syntax.terms import Spec

here = pathlib.Path(__file__).parent.resolve()


class CorpusEntry(TypedDict, total=False):
    description: str
    analog: bool
    fairness: str


@functools.cache
def metadata() -> dict[str, CorpusEntry]:
    with (here / 'metadata.yml').open() as metadata_file:
        return yaml.safe_load(metadata_file)


def corpus_names() -> list[str]:
    """Names of the bundled systems in the order of ``metadata.yml``."""
    return list(metadata())


def corpus_path(name: str) -> pathlib.Path:
    """
    File of a bundled system.

    Raises
    ------
    ValueError
        If there is no system called ``name``
    """
    if name not in metadata():
        raise ValueError(f'No bundled system {name!r}')
    return here / f'{name}.abc'


def load_corpus(name: str) -> Spec:
    return read_spec_file(corpus_path(name))


def load_corpus_fairness(name: str) -> FairnessSpec:
    """Fairness specification of a bundled system, empty when it has none."""
    spec = load_corpus(name)
    fairness = metadata()[name].get('fairness')
    if fairness is None:
        return ()
    return load_fairness(here / fairness, spec)


__all__ = [
    'CorpusEntry',
    'corpus_names',
    'corpus_path',
    'load_corpus',
    'load_corpus_fairness',
    'metadata',
]
