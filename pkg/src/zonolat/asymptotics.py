"""Limit constants, ball volumes, known diameter bounds, convergence tables.

The exact counts of the other modules converge, after normalization, to
closed-form constants built from zeta and gamma. For dimension d and norm
q (q = INF allowed, where gamma(1/q + 1) degenerates to 1):

    ball volume          (2 gamma(1/q+1) p)^d / gamma(d/q+1)
    diameter ratio       delta(d,p,q) / p^d      ->  (2 gamma(1/q+1))^d / (2 gamma(d/q+1) zeta(d))
    orthant ratio        delta_plus(d,p,q) / p^d ->  gamma(1/q+1)^d / (gamma(d/q+1) zeta(d))
    box ratio (q=1)      k(d,p) / p^(d+1)        ->  2^(d-1) / ((d+1)! zeta(d))
    diameter-power (q=1) delta^(d+1) / k^d       ->  2^d (d+1)^d / (2 d! zeta(d))
    growth (q=1)         delta / k^(d/(d+1))     ->  c(d) = (2^d (d+1)^d / (2 d! zeta(d)))^(1/(d+1))

c(d) is the multiplicative constant in the growth law  (largest diameter
of a lattice zonotope in [0,k]^d) ~ c(d) k^(d/(d+1)).

Empirical columns are always exact integer counts divided as late as
possible, so the only floating-point error is the final division.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .number_theory import gamma_pos, zeta
from .primitive import DEFAULT_ENUM_CAP, INF, Region, count_by_enumeration, count_primitive_sieve
from .zonotope import counted_metrics

__all__ = [
    "ZETA_TOL",
    "TableKind",
    "ConvergenceRow",
    "DiameterBounds",
    "ball_volume",
    "diameter_ratio_limit",
    "orthant_ratio_limit",
    "box_ratio_limit",
    "growth_constant",
    "known_diameter_bounds",
    "convergence_table",
]

ZETA_TOL = 1e-12


def _check_norm_arg(q) -> None:
    if q == INF:
        return
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        raise DomainError(f"norm must be a positive integer or INF, got {q!r}")


def _gamma_inv_q_plus_1(q) -> float:
    return 1.0 if q == INF else gamma_pos(1.0 / q + 1.0)


def _gamma_d_over_q_plus_1(d: int, q) -> float:
    return 1.0 if q == INF else gamma_pos(d / q + 1.0)


def ball_volume(d: int, p: float, q=1) -> float:
    """Volume of the d-dimensional ball of q-norm radius p."""
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    if p <= 0:
        raise DomainError(f"radius must be positive, got {p}")
    _check_norm_arg(q)
    if q == INF:
        return (2.0 * p) ** d
    return (2.0 * gamma_pos(1.0 / q + 1.0) * p) ** d / gamma_pos(d / q + 1.0)


def diameter_ratio_limit(d: int, q=1) -> float:
    """Limit of delta(d, p, q) / p^d as the radius grows."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    _check_norm_arg(q)
    num = (2.0 * _gamma_inv_q_plus_1(q)) ** d
    return num / (2.0 * _gamma_d_over_q_plus_1(d, q) * zeta(d, ZETA_TOL))


def orthant_ratio_limit(d: int, q=1) -> float:
    """Limit of delta_plus(d, p, q) / p^d as the radius grows."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    _check_norm_arg(q)
    num = _gamma_inv_q_plus_1(q) ** d
    return num / (_gamma_d_over_q_plus_1(d, q) * zeta(d, ZETA_TOL))


def box_ratio_limit(d: int) -> float:
    """Limit of k(d, p) / p^(d+1) for the 1-norm family."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    return 2.0 ** (d - 1) / (math.factorial(d + 1) * zeta(d, ZETA_TOL))


def growth_constant(d: int) -> float:
    """c(d): the constant in (max zonotope diameter in [0,k]^d) ~ c(d) k^(d/(d+1))."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    base = 2.0**d * (d + 1) ** d / (2.0 * math.factorial(d) * zeta(d, ZETA_TOL))
    return base ** (1.0 / (d + 1))


@dataclass(frozen=True)
class DiameterBounds:
    """Known values and bounds for the largest lattice-polytope diameter in [0,k]^d."""

    lower: int | None
    upper: int | None
    exact: int | None

    def as_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def known_diameter_bounds(d: int, k: int) -> DiameterBounds:
    """Book values: exact at k = 1 and 2, an upper bound for k >= 3, and a
    lower bound for k < 2d."""
    if d < 1 or k < 1:
        raise DomainError(f"need d >= 1 and k >= 1, got d={d}, k={k}")
    exact = d if k == 1 else (3 * d // 2 if k == 2 else None)
    upper = k * d - math.ceil(2 * d / 3) - (k - 3) if k >= 3 else None
    lower = (k + 1) * d // 2 if k < 2 * d else None
    return DiameterBounds(lower=lower, upper=upper, exact=exact)


class TableKind(Enum):
    DIAMETER = "diameter"  # delta / p^d, any norm
    ORTHANT = "orthant-diameter"  # delta_plus / p^d, any norm
    BOX = "box-size"  # k / p^(d+1), 1-norm only
    DIAMETER_POWER = "diameter-power"  # delta^(d+1) / k^d, 1-norm only
    GROWTH = "growth"  # delta / k^(d/(d+1)), 1-norm only


@dataclass(frozen=True)
class ConvergenceRow:
    """One radius of an empirical-versus-limit comparison."""

    p: int
    empirical: float
    limit: float
    relative_gap: float

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "empirical": self.empirical,
            "limit": self.limit,
            "relative_gap": self.relative_gap,
        }


def _table_limit(kind: TableKind, d: int, q) -> float:
    if kind is TableKind.DIAMETER:
        return diameter_ratio_limit(d, q)
    if kind is TableKind.ORTHANT:
        return orthant_ratio_limit(d, q)
    if kind is TableKind.BOX:
        return box_ratio_limit(d)
    if kind is TableKind.DIAMETER_POWER:
        return growth_constant(d) ** (d + 1)
    return growth_constant(d)


def _table_row(kind: TableKind, d: int, q, p: int, limit: float, cap: int) -> ConvergenceRow:
    if kind is TableKind.DIAMETER:
        delta = count_primitive_sieve(d, p, q, Region.CANONICAL_HALF, cap).count
        empirical = delta / p**d
    elif kind is TableKind.ORTHANT:
        plus = count_by_enumeration(d, p, q, Region.POSITIVE_ORTHANT, cap).count
        empirical = plus / p**d
    else:
        m = counted_metrics(d, p)
        if kind is TableKind.BOX:
            empirical = m.k / p ** (d + 1)
        elif kind is TableKind.DIAMETER_POWER:
            empirical = m.diameter ** (d + 1) / m.k**d
        else:
            empirical = m.diameter / m.k ** (d / (d + 1))
    return ConvergenceRow(
        p=p, empirical=empirical, limit=limit, relative_gap=abs(empirical - limit) / limit
    )


def convergence_table(
    d: int,
    q,
    p_list: list[int],
    kind: TableKind,
    cap: int = DEFAULT_ENUM_CAP,
    workers: int = 1,
) -> list[ConvergenceRow]:
    """Empirical ratio, limit, and relative gap at each requested radius.

    Rows are returned ordered by radius. The box-derived kinds require the
    1-norm. Rows are independent and may be computed in parallel; `workers`
    bounds the process count and never changes the output.
    """
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    _check_norm_arg(q)
    if kind in (TableKind.BOX, TableKind.DIAMETER_POWER, TableKind.GROWTH) and q != 1:
        raise DomainError(f"table kind {kind.value!r} is defined for the 1-norm only")
    if any(p < 1 for p in p_list):
        raise DomainError("all radii must be >= 1")
    radii = sorted(set(p_list))
    limit = _table_limit(kind, d, q)
    if workers > 1 and len(radii) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(
                pool.map(_table_row, *zip(*[(kind, d, q, p, limit, cap) for p in radii]))
            )
    else:
        rows = [_table_row(kind, d, q, p, limit, cap) for p in radii]
    return rows
