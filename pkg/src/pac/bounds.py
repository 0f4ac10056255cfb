"""
Sample-size and growth-function bounds for PAC learning of cross-products.
"""

import math
from typing import Sequence
from src.core.errors import DomainError
from src.models.pac import PacParams

VC_PRODUCT_A1 = 2.28
VC_PRODUCT_A2 = 3.92


def vc_product_bound(dims: Sequence[int], k: int) -> float:
    """
    Upper bound on the VC dimension of a k-fold cross-product.

    Args:
        dims: VC dimensions of the component classes
        k: Number of components

    Returns:
        ``a1 * ln(a2 * k) * sum(dims)``

    Raises:
        DomainError: For negative dimensions or ``k < 1``
    """
    if k < 1 or any(d < 0 for d in dims):
        raise DomainError(f"vc_product_bound needs k >= 1 and non-negative dims, got k={k}, dims={list(dims)}")
    return VC_PRODUCT_A1 * math.log(k * VC_PRODUCT_A2) * sum(dims)


def sample_size(params: PacParams) -> int:
    """
    Number of labeled examples an empirical risk minimizer needs.

    Args:
        params: Accuracy, confidence, constant ``b`` and component VC dimensions

    Returns:
        ``ceil(b * (d * ln(1/eps) + ln(1/delta)) / eps)`` with ``d = d1 + d2``
    """
    eps, delta = params.epsilon, params.delta
    return math.ceil(params.b * (params.d * math.log(1 / eps) + math.log(1 / delta)) / eps)


def growth_bound(m: int, d: int) -> float:
    """
    Sauer-Shelah bound ``(e*m/d)^d`` on the growth function.

    Raises:
        DomainError: Outside the stated range ``m > d + 1``, ``d >= 1``
    """
    if d < 1 or m <= d + 1:
        raise DomainError(f"growth_bound requires m > d + 1 and d >= 1, got m={m}, d={d}")
    return (math.e * m / d) ** d


def growth_upper(m: int, d: int) -> float:
    """Growth-function bound valid for every ``m >= 0``: ``min(2^m, (e*m/d)^d)``, and 1 when ``d == 0``."""
    if d == 0 or m == 0:
        return 1.0
    if m <= d:
        return float(2**m)
    return min(float(2**m), (math.e * m / d) ** d)
