import pathlib
from typing import TypedDict

import yaml

here = pathlib.Path(__file__).parent.resolve()

_KEYS = ('stem', 'cycle', 'lift', 'finlen', 'max_states')


class ConfigError(ValueError):
    """Exception raised for an unusable bounds configuration"""

    def __init__(self, message: str):
        super().__init__(f'Configuration error: {message}')
        self.message: str = message


class Bounds(TypedDict):
    """
    Limits of a bounded check.

    ``stem`` and ``cycle`` bound the transitions of a lasso, ``lift`` the lift period,
    ``finlen`` the transitions of a finite path and ``max_states`` the explored
    state space.
    """

    stem: int
    cycle: int
    lift: int
    finlen: int
    max_states: int


def _read(path: pathlib.Path) -> dict:
    with path.open() as config_file:
        loaded = yaml.safe_load(config_file)
    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        raise ConfigError(f'{path} does not hold a mapping')
    return loaded


def _validate(values: dict) -> Bounds:
    unknown = sorted(set(values) - set(_KEYS))
    if unknown:
        raise ConfigError(f'unknown bounds {", ".join(unknown)}')
    for key in _KEYS:
        value = values.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f'{key} must be an integer, got {value!r}')
        if value < 0 or (value == 0 and key != 'finlen'):
            raise ConfigError(f'{key} must be positive, got {value}')
    return {key: values[key] for key in _KEYS}  # type: ignore[return-value]


def load_bounds(path: str | pathlib.Path | None = None, **overrides: int | None) -> Bounds:
    """
    Bounds from the bundled defaults, an optional YAML file and explicit overrides.

    Later sources win; overrides that are ``None`` are ignored.

    Parameters
    ----------
    path
        YAML file mapping bound names to integers
    overrides
        Individual bounds, typically from command-line flags

    Raises
    ------
    ConfigError
        If a bound is unknown, not an integer or not positive (``finlen`` may be 0)

    Examples
    --------
    >>> load_bounds(stem=3)['stem']
    3
    """
    values = _read(here / 'defaults.yml')
    if path is not None:
        path = pathlib.Path(path)
        if not path.is_file():
            raise ConfigError(f'no config file {path}')
        values.update(_read(path))
    values.update({key: value for key, value in overrides.items() if value is not None})
    return _validate(values)


def default_bounds() -> Bounds:
    return load_bounds()
