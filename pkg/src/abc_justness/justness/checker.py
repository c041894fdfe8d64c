from typing import Protocol

from abc_justness.paths.states import Path

from .results import JustnessVerdict


class DecidesJustness(Protocol):
    """Protocol defining interface for justness checkers of paths over midway states."""

    lift_bound: int

    def verdict(self, path: Path) -> JustnessVerdict:
        """
        Decide whether a path is just.

        Parameters
        ----------
        path
            Finite path or lasso of processes and midway states

        Returns
        -------
        JustnessVerdict
            The answer together with the method, the lift period bound it was computed
            under and a witness
        """
        ...
