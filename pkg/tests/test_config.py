import pytest

from abc_justness.config import ConfigError, load_bounds

DEFAULTS = {'stem': 8, 'cycle': 8, 'lift': 2, 'finlen': 12, 'max_states': 100000}


def test_default_bounds():
    """Test the bundled default bounds."""
    assert load_bounds() == DEFAULTS


def test_overrides():
    """Test that explicit overrides win and None leaves a bound alone."""
    bounds = load_bounds(stem=3, cycle=None, finlen=0)
    assert bounds == {**DEFAULTS, 'stem': 3, 'finlen': 0}


def test_config_file(tmp_path):
    """Test reading bounds from a YAML file under the overrides."""
    path = tmp_path / 'bounds.yml'
    path.write_text('# small run\nstem: 4\nlift: 3\n', encoding='utf-8')
    assert load_bounds(path) == {**DEFAULTS, 'stem': 4, 'lift': 3}
    assert load_bounds(str(path), lift=1)['lift'] == 1


def test_empty_config_file(tmp_path):
    """Test that an empty file keeps the defaults."""
    path = tmp_path / 'empty.yml'
    path.write_text('', encoding='utf-8')
    assert load_bounds(path) == DEFAULTS


@pytest.mark.parametrize(
    'overrides,message',
    [
        ({'depth': 3}, 'unknown bounds depth'),
        ({'stem': '3'}, 'stem must be an integer'),
        ({'cycle': 2.5}, 'cycle must be an integer'),
        ({'lift': True}, 'lift must be an integer'),
        ({'stem': 0}, 'stem must be positive'),
        ({'max_states': -1}, 'max_states must be positive'),
        ({'finlen': -1}, 'finlen must be positive'),
    ],
)
def test_invalid_bounds(overrides: dict, message: str):
    """Test that unusable bounds are reported by name."""
    with pytest.raises(ConfigError) as excinfo:
        _ = load_bounds(**overrides)
    assert excinfo.value.message.startswith(message)
    assert str(excinfo.value).startswith('Configuration error: ')


def test_missing_config_file(tmp_path):
    """Test that a config file must exist."""
    with pytest.raises(ConfigError) as excinfo:
        _ = load_bounds(tmp_path / 'absent.yml')
    assert excinfo.value.message.startswith('no config file')


def test_config_file_must_be_mapping(tmp_path):
    """Test that a YAML list is not a bounds configuration."""
    path = tmp_path / 'list.yml'
    path.write_text('- 1\n- 2\n', encoding='utf-8')
    with pytest.raises(ConfigError):
        _ = load_bounds(path)
