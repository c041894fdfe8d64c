from typing import Literal, TypeAlias, TypedDict

JustnessMethod: TypeAlias = Literal['def1', 'thm3-lift']


class JustnessVerdict(TypedDict):
    """
    Outcome of a justness check.

    ``exact`` is false only for an unjust answer that a longer lift period could
    overturn. ``witness`` holds the certifying decomposition tree of a just path, or
    the obstruction found for an unjust one.
    """

    just: bool
    method: JustnessMethod
    lift_bound: int
    exact: bool
    witness: dict | None
