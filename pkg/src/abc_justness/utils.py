from collections.abc import Hashable, Iterable
from pathlib import Path
from typing import TypeVar

import chardet

T = TypeVar('T', bound=Hashable)


def dedupe(items: Iterable[T]) -> list[T]:
    """
    Drop repeated items, keeping the first occurrence of each.

    Examples
    --------
    >>> dedupe([3, 1, 3, 2, 1])
    [3, 1, 2]
    """
    return list(dict.fromkeys(items))


def detect_encoding(file_path: str | Path) -> str:
    """
    Detect the encoding of a file using chardet.

    Parameters
    ----------
    file_path
        Path to the file to analyze

    Returns
    -------
    str
        Detected encoding name, ``utf-8`` when detection is inconclusive
    """
    with open(file_path, 'rb') as file:
        result = chardet.detect(file.read())
        return result['encoding'] or 'utf-8'
