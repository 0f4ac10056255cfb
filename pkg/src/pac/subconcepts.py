"""
Recursive search for a pair of component concepts whose product is consistent with a sample.
"""

from typing import Any, List, Optional, Sequence, Tuple
import logging
from src.models.concepts import ConceptDesc
from src.models.pac import SubconceptSearch
from src.pac.bounds import growth_upper
from src.pac.finders import ConsistencyFinder

logger = logging.getLogger(__name__)

Labels = List[Tuple[Any, bool]]


def find_subconcepts(
    splus: Sequence[Any],
    sminus: Sequence[Any],
    delta: float,
    f1: ConsistencyFinder,
    f2: ConsistencyFinder,
) -> SubconceptSearch:
    """
    Find ``(c1, c2)`` with ``c1 x c2`` consistent with every positive and negative pair.

    Positives label both projections true. Each negative ``(x1, x2)`` is blamed
    either on the first component (``x1`` false) or on the second (``x1`` true,
    ``x2`` false); the first-component branch is tried first and any branch
    whose first-component labels admit no concept is pruned.

    Args:
        splus: Positive two-dimensional points
        sminus: Negative two-dimensional points
        delta: Confidence parameter, scaled down to ``delta'`` for the finders
        f1: Finder for the first component class
        f2: Finder for the second component class

    Returns:
        The search result; ``pair`` is None when no consistent pair exists.
        ``nodes`` counts branches that passed the first-component check.
    """
    splus, sminus = list(splus), list(sminus)
    n = len(sminus)
    total = len(splus) + n
    epsilon_prime = 1.0 / total if total else 1.0
    delta_prime = delta / (n * growth_upper(n, f1.vc_dim) + growth_upper(n, f2.vc_dim))
    nodes = 0

    def search(i: int, l1: Labels, l2: Labels) -> Optional[Tuple[ConceptDesc, ConceptDesc]]:
        nonlocal nodes
        if i == n:
            c1 = f1.find(l1, epsilon_prime, delta_prime)
            c2 = f2.find(l2, epsilon_prime, delta_prime)
            return None if c1 is None or c2 is None else (c1, c2)
        x1, x2 = sminus[i]
        for blame_first in (True, False):
            branch = l1 + [(x1, not blame_first)]
            if f1.find(branch, epsilon_prime, delta_prime) is None:
                continue
            nodes += 1
            found = search(i + 1, branch, l2 if blame_first else l2 + [(x2, False)])
            if found is not None:
                return found
        return None

    pair = search(0, [(p[0], True) for p in splus], [(p[1], True) for p in splus])
    logger.debug(f"find_subconcepts: |S+|={len(splus)} |S-|={n} nodes={nodes} found={pair is not None}")
    return SubconceptSearch(pair=pair, nodes=nodes, epsilon_prime=epsilon_prime, delta_prime=delta_prime)
