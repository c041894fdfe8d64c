from typing import Literal, TypeAlias, TypedDict

from abc_justness.config import Bounds


class _HoldsVerdict(TypedDict):
    status: Literal['holds']
    bounds: Bounds


class _FailsVerdict(TypedDict):
    status: Literal['fails']
    bounds: Bounds
    counterexample: dict


class _UnknownVerdict(TypedDict):
    status: Literal['unknown']
    bounds: Bounds
    reason: str


Verdict: TypeAlias = _HoldsVerdict | _FailsVerdict | _UnknownVerdict
