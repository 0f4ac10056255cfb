"""
Service layer running learn, lower-bound, PAC and table experiments.
"""

from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import numpy as np
from src.adversary import (
    AdversarialPosOracle,
    AdversarialPrefixOracle,
    AdversarialSingletonOracle,
    BreadthFirstPrefixLearner,
    consistency_certificate,
    consistent_concepts,
    count_justifiable,
    render_tree,
)
from src.concepts import build_class
from src.concepts.base import ConceptClass
from src.concepts.classes import Intervals, PrefixClass, Singletons
from src.concepts.composite import PairDemo, ProductClass, UnionClass
from src.core.errors import BudgetExhausted, ConfigError
from src.core.oracle import HonestOracle
from src.core.session import render_transcript, run_session
from src.learners import (
    EliminationLearner,
    PosProductLearner,
    SublearnerFactory,
    learn_disjoint_union,
    learn_prefix_eq,
    learn_product_cex_mem_pos,
    learn_product_mem_only,
    learn_product_mem_pos,
    learn_product_sup,
)
from src.models.concepts import ConceptDesc, PrefixConcept, ProductConcept, UnionConcept
from src.models.experiment import ComplexityRow, Construction, ExperimentConfig, LearnMode
from src.models.pac import PacParams, TrialReport, TrialSummary
from src.models.queries import QueryKind, QueryStats, SessionResult
from src.pac import run_pac_trials, summarize_trials
from src.utils.concept_syntax import parse_class, parse_concept, parse_point

logger = logging.getLogger(__name__)

POS_ADVERSARY_ANSWERS = 20
PREFIX_TABLE_SIZE = 8


def _stats_dict(stats: QueryStats) -> Dict[str, int]:
    return {kind.value: n for kind, n in sorted(stats.counts.items(), key=lambda item: item[0].value)}


def _max_stats(results: Sequence[QueryStats]) -> QueryStats:
    """Per-kind maximum over several sessions."""
    counts: Dict[QueryKind, int] = {}
    for stats in results:
        for kind, n in stats.counts.items():
            counts[kind] = max(counts.get(kind, 0), n)
    return QueryStats(counts=counts, total=sum(counts.values()))


class ExperimentService:
    """Runs experiments against honest and adversarial oracles."""

    def __init__(self, factory: SublearnerFactory, budget: int, prefix_max_len: int = 4):
        """
        Initialize the experiment service.

        Args:
            factory: Source of the reference sublearners
            budget: Default query budget per session
            prefix_max_len: Longest prefix string for ``prefix(U)`` specs and the table's prefix row
        """
        self.factory = factory
        self.budget = budget
        self.prefix_max_len = prefix_max_len
        self._worst_case: Dict[Tuple[Any, QueryKind], int] = {}

    # learn

    def resolve(self, class_spec: str, target_spec: str) -> Tuple[ConceptClass, ConceptDesc]:
        """
        Parse a class and a target spec and check the target belongs to the class.

        Raises:
            ConfigError: If either spec is malformed or the target is foreign to the class
        """
        concept_class = build_class(parse_class(class_spec, self.prefix_max_len))
        target = concept_class.normalize(parse_concept(target_spec))
        if not concept_class.is_concept(target):
            raise ConfigError(f"{target_spec} is not a concept of {concept_class.class_id}")
        return concept_class, target

    def run_learner(
        self,
        concept_class: ConceptClass,
        target: ConceptDesc,
        mode: LearnMode,
        positive: Optional[Any] = None,
        budget: Optional[int] = None,
    ) -> SessionResult:
        """
        Learn ``target`` with the combinator that fits the class and the query set.

        Args:
            concept_class: Class to learn in
            target: Hidden target
            mode: Query set to use
            positive: Positive example for the Mem+1Pos modes; asked for when omitted
            budget: Query budget; the service default when omitted

        Returns:
            SessionResult of the run

        Raises:
            ConfigError: If no learner in the repository uses this query set for this class
        """
        budget = budget or self.budget
        oracle = HonestOracle(concept_class, target)
        kind = mode.kind

        if isinstance(concept_class, ProductClass):
            subs = self.factory.create_all(concept_class.parts, kind)
            if mode == LearnMode.SUP:
                return learn_product_sup(subs, oracle, budget)
            if mode == LearnMode.MEM:
                return learn_product_mem_only(subs, oracle, budget)
            if mode == LearnMode.MEM_POS:
                return learn_product_mem_pos(subs, oracle, positive, budget)
            if mode in (LearnMode.SUB_MEM_POS, LearnMode.EQ_MEM_POS):
                return learn_product_cex_mem_pos(subs, oracle, positive, kind, budget)
            if mode == LearnMode.POS:
                return run_session(PosProductLearner(concept_class, subs), oracle, budget)
            if all(isinstance(part, Singletons) for part in concept_class.parts):
                return run_session(EliminationLearner(concept_class, kind), oracle, budget)
            raise ConfigError(f"products learn from {mode.value} alone only for singleton components")

        if isinstance(concept_class, UnionClass):
            if mode not in (LearnMode.SUP, LearnMode.SUB, LearnMode.EQ, LearnMode.MEM):
                raise ConfigError(f"disjoint unions are learned from sup, sub, eq or mem, not {mode.value}")
            return learn_disjoint_union(self.factory.create_all(concept_class.parts, kind), oracle, kind, budget)

        if mode in (LearnMode.MEM_POS, LearnMode.SUB_MEM_POS, LearnMode.EQ_MEM_POS):
            raise ConfigError(f"{mode.value} needs a product class")
        if isinstance(concept_class, PrefixClass) and kind in (QueryKind.SUB, QueryKind.EQ):
            return learn_prefix_eq(oracle, budget, kind)
        return run_session(self.factory.create(concept_class, kind).spawn(), oracle, budget)

    def learn(self, config: ExperimentConfig) -> Dict[str, Any]:
        """
        Run one learn experiment and build its report.

        Returns:
            Report with hypothesis, exactness, per-kind counts and transcript
        """
        if not config.class_spec or not config.target_spec:
            raise ConfigError("learn needs --class and --target")
        concept_class, target = self.resolve(config.class_spec, config.target_spec)
        positive = parse_point(config.positive) if config.positive else None
        logger.info(f"Learning {concept_class.render_concept(target)} in {concept_class.class_id} with {config.mode.value}")
        try:
            result = self.run_learner(concept_class, target, config.mode, positive, config.budget)
        except Exception as e:
            logger.error(f"Learn run failed: {e}")
            raise
        return {
            "class": str(concept_class.class_id),
            "target": concept_class.render_concept(target),
            "mode": config.mode.value,
            "hypothesis": concept_class.render_concept(result.hypothesis),
            "exact": concept_class.equivalent(result.hypothesis, target),
            "counts": _stats_dict(result.stats),
            "total": result.stats.total,
            "transcript": render_transcript(result.transcript),
        }

    # lower bounds

    def lowerbound(self, config: ExperimentConfig) -> Dict[str, Any]:
        """
        Run one lower-bound construction.

        Returns:
            Report whose ``ok`` field says whether the bound was demonstrated
        """
        logger.info(f"Running the {config.construction.value} lower-bound construction")
        if config.construction == Construction.PREFIX:
            return self.prefix_lowerbound(config.k, config.r, config.size, config.mode.kind)
        if config.construction == Construction.SINGLETON:
            return self.singleton_lowerbound(config.m, config.k, config.mode.kind, config.budget)
        return self.pos_lowerbound(config.size)

    def prefix_lowerbound(self, k: int, r: int, size: int, kind: QueryKind = QueryKind.SUB) -> Dict[str, Any]:
        """
        Drive the breadth-first learner against the prefix adversary.

        The learner stops after ``k^r - 1`` queries (or once every level below
        ``r`` is queried, when that takes longer).
        """
        if kind not in (QueryKind.SUB, QueryKind.EQ):
            kind = QueryKind.SUB
        concept_class = ProductClass([PrefixClass(max(size, k ** (r + 2)), r) for _ in range(k)])
        oracle = AdversarialPrefixOracle(concept_class)
        budget = max(sum(k**j for j in range(r)), k**r - 1)
        stats = QueryStats()
        if budget > 0:
            try:
                stats = run_session(BreadthFirstPrefixLearner(concept_class, kind), oracle, budget).stats
            except BudgetExhausted as e:
                stats = e.stats
        justifiable = count_justifiable(oracle.log, r)
        certificate = consistency_certificate(oracle.log, concept_class)
        return {
            "construction": Construction.PREFIX.value,
            "k": k,
            "r": r,
            "queries": stats.total,
            "justifiable": justifiable,
            "expected": k**r,
            "certificate": None if certificate is None else concept_class.render_concept(certificate),
            "tree": render_tree(oracle.log, concept_class),
            "ok": justifiable == k**r and certificate is not None,
        }

    def singleton_lowerbound(
        self, m: int, k: int, kind: QueryKind = QueryKind.MEM, budget: Optional[int] = None
    ) -> Dict[str, Any]:
        """Run the elimination learner against the singleton adversary, to completion and one query short."""
        if kind not in (QueryKind.MEM, QueryKind.SUB, QueryKind.EQ):
            kind = QueryKind.MEM
        bound = (m + 1) ** k - 1
        oracle = AdversarialSingletonOracle(m, k)
        result = run_session(EliminationLearner(oracle.concept_class, kind), oracle, budget or self.budget)

        short = AdversarialSingletonOracle(m, k)
        if bound > 1:
            try:
                run_session(EliminationLearner(short.concept_class, kind), short, bound - 1)
            except BudgetExhausted:
                pass
        return {
            "construction": Construction.SINGLETON.value,
            "m": m,
            "k": k,
            "mode": kind.value,
            "queries": result.stats.total,
            "bound": bound,
            "hypothesis": oracle.concept_class.render_concept(result.hypothesis),
            "consistent_after_bound_minus_one": short.consistent_count,
            "ok": result.stats.total >= bound and short.consistent_count >= 2,
        }

    def pos_lowerbound(self, size: int, answers: int = POS_ADVERSARY_ANSWERS) -> Dict[str, Any]:
        """Let the naive Pos combinator pull ``answers`` adversarial examples, then count consistent concepts."""
        concept_class = PairDemo(max(size, answers))
        oracle = AdversarialPosOracle(concept_class)
        learner = PosProductLearner(concept_class, self.factory.create_all(concept_class.parts, QueryKind.POS))
        finished = False
        try:
            run_session(learner, oracle, answers)
            finished = True
        except BudgetExhausted:
            pass
        consistent = consistent_concepts(concept_class, oracle.issued)
        return {
            "construction": Construction.POS.value,
            "answers": len(oracle.issued),
            "consistent": len(consistent),
            "concepts": [concept_class.render_concept(c) for c in consistent],
            "ok": not finished and len(consistent) >= 2,
        }

    # pac

    def pac(self, config: ExperimentConfig) -> Tuple[List[TrialReport], TrialSummary]:
        """Run seeded PAC trials on rectangles and summarize their failure rate."""
        params = PacParams(epsilon=config.epsilon, delta=config.delta, b=config.b)
        logger.info(f"Running {config.trials} PAC trials (seed={config.seed}, with_mem={config.with_mem})")
        reports = run_pac_trials(params, config.trials, config.seed, config.size, config.with_mem)
        return reports, summarize_trials(reports, config.delta)

    # table

    def worst_case(self, concept_class: ConceptClass, kind: QueryKind) -> int:
        """Largest number of ``kind`` queries the reference learner makes over every target of the class."""
        key = (concept_class.class_id, kind)
        if key not in self._worst_case:
            spec = self.factory.create(concept_class, kind)
            self._worst_case[key] = max(spec.standalone_count(c) for c in concept_class.concepts())
            logger.debug(f"worst case {kind.value} for {concept_class.class_id}: {self._worst_case[key]}")
        return self._worst_case[key]

    def _random_concept(self, rng: np.random.Generator, concepts: List[ConceptDesc]) -> ConceptDesc:
        return concepts[int(rng.integers(0, len(concepts)))]

    def _product_row(
        self,
        rng: np.random.Generator,
        concept_class: ProductClass,
        mode: LearnMode,
        label: str,
        query_set: str,
        trials: int,
        bounds: Dict[str, float],
        budget: Optional[int] = None,
    ) -> ComplexityRow:
        pools = [list(part.concepts()) for part in concept_class.parts]
        results, inexact = [], 0
        for _ in range(trials):
            target = ProductConcept(parts=tuple(self._random_concept(rng, pool) for pool in pools))
            result = self.run_learner(concept_class, target, mode, budget=budget)
            if not concept_class.equivalent(result.hypothesis, target):
                logger.error(f"{label}: learned {concept_class.render_concept(result.hypothesis)} for {concept_class.render_concept(target)}")
                inexact += 1
            results.append(result.stats)
        measured = _max_stats(results)
        observed = {key: measured.count(QueryKind(key)) for key in bounds}
        if inexact:
            observed["inexact"], bounds = inexact, {**bounds, "inexact": 0}
        return ComplexityRow(mode=label, query_set=query_set, measured=measured, observed=observed, bounds=bounds)

    def _union_row(
        self, rng: np.random.Generator, concept_class: UnionClass, mode: LearnMode, trials: int, budget: Optional[int] = None
    ) -> ComplexityRow:
        kind = mode.kind
        pools = [list(part.concepts()) for part in concept_class.parts]
        bound = sum(self.worst_case(part, kind) for part in concept_class.parts)
        results = []
        for _ in range(trials):
            target = UnionConcept(parts=tuple(self._random_concept(rng, pool) for pool in pools))
            results.append(self.run_learner(concept_class, target, mode, budget=budget).stats)
        measured = _max_stats(results)
        return ComplexityRow(
            mode=kind.value,
            query_set="disjoint union",
            measured=measured,
            observed={kind.value: measured.count(kind)},
            bounds={kind.value: bound},
        )

    def _prefix_row(self, rng: np.random.Generator, trials: int, budget: Optional[int] = None) -> ComplexityRow:
        concept_class = PrefixClass(PREFIX_TABLE_SIZE, self.prefix_max_len)
        results, excess = [], 0
        for _ in range(trials):
            length = int(rng.integers(0, self.prefix_max_len + 1))
            target = PrefixConcept(s=tuple(int(a) for a in rng.integers(0, PREFIX_TABLE_SIZE, size=length)))
            result = learn_prefix_eq(HonestOracle(concept_class, target), budget or self.budget)
            excess = max(excess, result.stats.count(QueryKind.EQ) - length)
            results.append(result.stats)
        return ComplexityRow(
            mode="EQ",
            query_set="prefix class",
            measured=_max_stats(results),
            observed={"EQ-|s|": excess},
            bounds={"EQ-|s|": 1},
            note="at most |s|+1 EQ queries",
        )

    def table(self, config: ExperimentConfig) -> List[ComplexityRow]:
        """
        Build every row of the query-complexity table.

        Product and union rows use ``k`` interval components over ``[0, U)``
        and compare the worst of ``trials`` random targets with bounds built
        from the reference learners' worst cases. Lower-bound rows come from
        the adversaries.

        Returns:
            Rows in table order
        """
        k, trials, budget = config.k, config.trials, config.budget
        rng = np.random.default_rng(config.seed)
        part = Intervals(config.size)
        product_class = ProductClass([part] * k)
        worst = {kind: self.worst_case(part, kind) for kind in (QueryKind.SUP, QueryKind.SUB, QueryKind.EQ, QueryKind.MEM)}
        logger.info(f"Building the complexity table: k={k}, U={config.size}, trials={trials}, seed={config.seed}")

        pos = self.pos_lowerbound(config.size)
        rows = [
            ComplexityRow(
                mode="Pos",
                query_set="only Q",
                relation="impossible",
                measured=QueryStats(counts={QueryKind.POS: pos["answers"]}, total=pos["answers"]),
                observed={"consistent": pos["consistent"]},
                bounds={"consistent": 2},
                note=f"not possible: {pos['consistent']} concepts consistent after {pos['answers']} answers",
            ),
            self._product_row(
                rng, product_class, LearnMode.SUP, "Sup", "only Q", trials, {"Sup": k * worst[QueryKind.SUP]}, budget=budget
            ),
            self._product_row(
                rng, product_class, LearnMode.MEM, "Mem", "only Q", trials,
                {"Mem": prod(worst[QueryKind.MEM] + 2 for _ in range(k))}, budget=budget,
            ),
        ]

        singleton = self.singleton_lowerbound(config.m, k, budget=budget)
        rows.append(
            ComplexityRow(
                mode="Mem",
                query_set="only Q (singleton adversary)",
                relation="lower",
                measured=QueryStats(counts={QueryKind.MEM: singleton["queries"]}, total=singleton["queries"]),
                observed={"Mem": singleton["queries"], "consistent": singleton["consistent_after_bound_minus_one"]},
                bounds={"Mem": singleton["bound"], "consistent": 2},
                note=f"(m+1)^k-1 with m={config.m}",
            )
        )
        rows.append(
            self._product_row(
                rng, product_class, LearnMode.MEM_POS, "Mem", "Q + 1Pos", trials,
                {"Mem": k * k * worst[QueryKind.MEM], "1Pos": 1}, budget=budget,
            )
        )

        for kind, mode in ((QueryKind.SUB, LearnMode.SUB_MEM_POS), (QueryKind.EQ, LearnMode.EQ_MEM_POS)):
            prefix = self.prefix_lowerbound(k, config.r, config.size, kind)
            rows.append(
                ComplexityRow(
                    mode=kind.value,
                    query_set="only Q (prefix adversary)",
                    relation="lower",
                    measured=QueryStats(counts={kind: prefix["queries"]}, total=prefix["queries"]),
                    observed={"justifiable": prefix["justifiable"], "certificate": int(prefix["certificate"] is not None)},
                    bounds={"justifiable": k ** config.r, "certificate": 1},
                    note=f"k^r with r={config.r}",
                )
            )
            sigma = k * worst[kind]
            rows.append(
                self._product_row(
                    rng, product_class, mode, kind.value, "Q + Mem + 1Pos", trials,
                    {kind.value: sigma, "Mem": k * sigma, "1Pos": 1}, budget=budget,
                )
            )

        rows.append(self._prefix_row(rng, trials, budget))
        union_class = UnionClass([part] * k)
        for mode in (LearnMode.SUP, LearnMode.SUB, LearnMode.EQ, LearnMode.MEM):
            rows.append(self._union_row(rng, union_class, mode, trials, budget))
        return rows
