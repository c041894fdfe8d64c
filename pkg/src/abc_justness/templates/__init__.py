import pathlib

from jinja2 import Environment, FileSystemLoader, StrictUndefined

here = pathlib.Path(__file__).parent.resolve()


def dot_escape(text: object) -> str:
    return str(text).replace('\\', '\\\\').replace('"', '\\"')


jinja_env = Environment(
    loader=FileSystemLoader(str(here)),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
)
jinja_env.filters['dot_escape'] = dot_escape  # pyright: ignore

lts_template = jinja_env.get_template('lts.dot.jinja')
verdict_template = jinja_env.get_template('verdict.txt.jinja')
justness_template = jinja_env.get_template('justness.txt.jinja')

__all__ = ['justness_template', 'lts_template', 'verdict_template']
