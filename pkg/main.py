import logging
from pathlib import Path

import polars as pl

from abc_justness.checking import enumerate_lassos
from abc_justness.config import load_bounds
from abc_justness.corpus import corpus_names, load_corpus, metadata
from abc_justness.justness import get_justness_checker
from abc_justness.paths import render_path
from abc_justness.sos import StateBoundExceeded, reachable

logger = logging.getLogger(__name__)

STEM, CYCLE, MAX_STATES = 3, 4, 200


def sweep(name: str, lift: int) -> list[dict]:
    """
    Both justness verdicts for every simple lasso of a bundled system.

    Parameters
    ----------
    name : str
        Bundled system
    lift : int
        Lift period bound of the lift-based checker

    Returns
    -------
    list of dict
        One row per lasso
    """
    spec = load_corpus(name)
    def1 = get_justness_checker('def1', spec, lift)
    lift_checker = get_justness_checker('thm3-lift', spec, lift)

    rows = []
    for lasso in enumerate_lassos(spec, STEM, CYCLE, MAX_STATES):
        by_clauses = def1.verdict(lasso)
        by_lifts = lift_checker.verdict(lasso)
        rows.append(
            {
                'system': name,
                'lasso': render_path(lasso),
                'stem_length': len(lasso.stem) // 2,
                'cycle_length': len(lasso.cycle) // 2,
                'def1_just': by_clauses['just'],
                'def1_exact': by_clauses['exact'],
                'lift_just': by_lifts['just'],
                'agree': by_clauses['just'] == by_lifts['just'],
            }
        )
    return rows


def main():
    logging.basicConfig(level=logging.INFO)
    export_path = Path('./export_data')
    if not export_path.exists():
        export_path.mkdir()

    lift = load_bounds()['lift']
    for name in corpus_names():
        output_df_path = export_path / f'{name}.parquet'
        if output_df_path.exists():
            continue

        spec = load_corpus(name)
        try:
            states = len(reachable(spec.init, spec, MAX_STATES).states)
        except StateBoundExceeded:
            logger.warning('Skipping %s: more than %d states', name, MAX_STATES)
            continue

        rows = sweep(name, lift)
        df = pl.from_dicts(
            rows,
            schema={
                'system': pl.String,
                'lasso': pl.String,
                'stem_length': pl.Int64,
                'cycle_length': pl.Int64,
                'def1_just': pl.Boolean,
                'def1_exact': pl.Boolean,
                'lift_just': pl.Boolean,
                'agree': pl.Boolean,
            },
        ).with_columns(
            pl.lit(states).alias('states'),
            pl.lit(metadata()[name].get('description', '')).alias('description'),
        )
        disagreements = df.filter(~pl.col('agree')).height
        logger.info('%s: %d lassos, %d disagreements', name, df.height, disagreements)
        df.write_parquet(output_df_path, compression='zstd', compression_level=12)


if __name__ == '__main__':
    main()
