"""
Seeded PAC trials on rectangles over a uniform grid.
"""

import csv
import io
import math
from typing import List
import logging
import numpy as np
from src.concepts.classes import Intervals
from src.concepts.composite import ProductClass
from src.core.oracle import HonestOracle
from src.models.concepts import Interval, ProductConcept
from src.models.pac import PacParams, TrialReport, TrialSummary
from src.pac.distribution import Distribution, ExampleOracle, exact_error
from src.pac.finders import IntervalFinder
from src.pac.learners import pac_learn_product, pac_learn_with_mem

logger = logging.getLogger(__name__)

TRIAL_FIELDS = ["seed", "m", "epsilon", "delta", "error", "nodes", "mem_queries"]


def random_rectangle(rng: np.random.Generator, grid: int) -> ProductConcept:
    """Uniformly chosen endpoints per axis, sorted into an interval."""
    parts = []
    for _ in range(2):
        lo, hi = sorted(int(v) for v in rng.integers(0, grid, size=2))
        parts.append(Interval(lo=lo, hi=hi))
    return ProductConcept(parts=tuple(parts))


def run_pac_trials(
    params: PacParams, trials: int, seed: int, grid: int = 16, with_mem: bool = False
) -> List[TrialReport]:
    """
    Learn a fresh random rectangle in each trial and measure its exact error.

    Trial ``i`` uses seed ``seed + i`` for both the target and the sample, so a
    report row can be replayed on its own.

    Args:
        params: Accuracy and confidence; VC dimensions are taken from the interval finders
        trials: Number of trials
        seed: Base seed
        grid: Side of the uniform grid
        with_mem: Use the Mem-assisted learner instead of the sample-only one

    Returns:
        One report per trial, in seed order
    """
    axis = Intervals(grid)
    cls = ProductClass([axis, axis])
    dist = Distribution.uniform(cls)
    finders = [IntervalFinder(axis), IntervalFinder(axis)]
    params = params.model_copy(update={"d1": finders[0].vc_dim, "d2": finders[1].vc_dim})

    reports = []
    for i in range(trials):
        trial_seed = seed + i
        target = random_rectangle(np.random.default_rng(trial_seed), grid)
        ex_oracle = ExampleOracle(cls, target, dist, seed=trial_seed)
        if with_mem:
            outcome = pac_learn_with_mem(params, ex_oracle, HonestOracle(cls, target), 2, finders)
        else:
            outcome = pac_learn_product(params, ex_oracle, finders[0], finders[1])
        error = exact_error(dist, cls, target, outcome.hypothesis)
        logger.debug(f"trial seed={trial_seed} target={cls.render_concept(target)} error={error:.4f}")
        reports.append(
            TrialReport(
                seed=trial_seed,
                m=outcome.sample_size,
                epsilon=params.epsilon,
                delta=params.delta,
                error=error,
                nodes=outcome.nodes,
                mem_queries=outcome.mem_queries,
            )
        )
    return reports


def summarize_trials(reports: List[TrialReport], delta: float) -> TrialSummary:
    """Failure rate against ``delta + 3 * sigma`` with ``sigma = sqrt(delta(1-delta)/n)``."""
    n = len(reports)
    failures = sum(1 for r in reports if r.failed)
    rate = failures / n if n else 0.0
    threshold = delta + 3 * math.sqrt(delta * (1 - delta) / n) if n else 1.0
    return TrialSummary(trials=n, failures=failures, failure_rate=rate, threshold=threshold, passed=rate <= threshold)


def reports_to_csv(reports: List[TrialReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TRIAL_FIELDS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(report.model_dump(include=set(TRIAL_FIELDS)))
    return buffer.getvalue()
