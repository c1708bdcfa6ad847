"""Primitive lattice points of q-norm balls: enumeration and exact counting.

A lattice point is primitive when it is nonzero and the gcd of its
coordinates is 1. Counts are produced by two independent routes:

  * direct enumeration (`count_by_enumeration`), which walks the ball and
    tests gcd's, batching only the innermost coordinate;
  * the Moebius sieve (`count_primitive_sieve`), which inclusion-excludes
    scaled copies of the full ball:  sum_m mu(m) * (|ball(p/m)| - 1).

The two must agree wherever both apply; the test suite enforces this.
All arithmetic is exact, there is no floating point anywhere in a count.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from enum import Enum
from math import comb, gcd

from .errors import DomainError, ResourceLimitError, UnsupportedRegionError
from .number_theory import _mu_upto

__all__ = [
    "INF",
    "Region",
    "CountReport",
    "is_primitive",
    "canonical_sign",
    "enumerate_primitive",
    "lattice_count_ball",
    "count_by_enumeration",
    "count_primitive_sieve",
    "count_primitive",
    "count_orthant_interior",
    "parse_norm",
    "norm_token",
]

Vector = tuple[int, ...]

INF = math.inf

DEFAULT_ENUM_CAP = 10**8

# gcd values up to this bound get a cumulative coprime-count row; larger
# (rare) gcd's fall back to a direct scan
_SMALL_GCD_MAX = 64


class Region(Enum):
    """Subset of the ball whose primitive points are wanted."""

    FULL_BALL = "full_ball"
    CANONICAL_HALF = "canonical_half"  # first nonzero coordinate positive
    POSITIVE_ORTHANT = "positive_orthant"  # all coordinates >= 0, point != 0
    ORTHANT_INTERIOR = "orthant_interior"  # all coordinates >= 1


@dataclass(frozen=True)
class CountReport:
    """An exact primitive-point count together with how it was obtained."""

    d: int
    p: int
    q: int | float
    region: Region
    count: int
    method: str  # "enumeration" or "sieve"

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "q": norm_token(self.q),
            "region": self.region.value,
            "count": self.count,
            "method": self.method,
        }


def _check_norm(q) -> None:
    if q == INF:
        return
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        raise DomainError(f"norm must be a positive integer or INF, got {q!r}")


def parse_norm(text: str) -> int | float:
    """Parse a norm flag value: '1', '2', ..., or 'inf'."""
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        q = int(text)
    except ValueError:
        raise DomainError(f"cannot parse norm {text!r}") from None
    _check_norm(q)
    return q


def norm_token(q) -> int | str:
    """JSON-friendly form of a norm: an int, or the string 'inf'."""
    return "inf" if q == INF else q


def is_primitive(v) -> bool:
    """True iff v is nonzero and the gcd of its coordinates is 1."""
    g = 0
    for c in v:
        g = gcd(g, c)
    return g == 1


def canonical_sign(v) -> Vector:
    """The representative of {v, -v} whose first nonzero coordinate is positive."""
    for c in v:
        if c > 0:
            return tuple(v)
        if c < 0:
            return tuple(-x for x in v)
    raise DomainError("the zero vector has no canonical sign")


def _int_root(n: int, q: int) -> int:
    """Largest t >= 0 with t**q <= n (n >= 0)."""
    if n < 0:
        return -1
    if q == 1:
        return n
    if q == 2:
        return math.isqrt(n)
    t = int(round(n ** (1.0 / q)))
    while t > 0 and t**q > n:
        t -= 1
    while (t + 1) ** q <= n:
        t += 1
    return t


def _candidate_estimate(d: int, p: int, q) -> int:
    """Upper bound on lattice points inspected by an enumeration over the ball."""
    if q == 1:
        return sum((1 << i) * comb(d, i) * comb(p, i) for i in range(d + 1))
    return (2 * p + 1) ** d


def _check_enum_args(d: int, p: int, q, cap: int) -> None:
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    if p < 0:
        raise DomainError(f"radius must be >= 0, got {p}")
    _check_norm(q)
    est = _candidate_estimate(d, p, q)
    if est > cap:
        raise ResourceLimitError(
            f"estimated {est} enumeration candidates exceeds cap of {cap}"
        )


def enumerate_primitive(
    d: int, p: int, q=1, region: Region = Region.CANONICAL_HALF, cap: int = DEFAULT_ENUM_CAP
) -> list[Vector]:
    """All primitive points of the given region of the ball of q-norm radius p.

    Output is deterministic: lexicographically increasing on coordinates.
    Raises ResourceLimitError when the ball is estimated to exceed `cap`.
    """
    _check_enum_args(d, p, q, cap)
    if not isinstance(region, Region):
        raise DomainError(f"unknown region {region!r}")

    infinite = q == INF
    budget = 0 if infinite else p**q
    out: list[Vector] = []
    prefix = [0] * d

    # level bounds: remaining q-norm budget -> largest admissible |coordinate|
    def bound(remaining: int) -> int:
        return p if infinite else _int_root(remaining, q)

    def descend(level: int, remaining: int, g: int, started: bool) -> None:
        b = bound(remaining)
        last = level == d - 1
        if region is Region.FULL_BALL:
            lo, hi = -b, b
        elif region is Region.CANONICAL_HALF:
            lo, hi = (-b, b) if started else (0, b)
        elif region is Region.POSITIVE_ORTHANT:
            lo, hi = 0, b
        else:  # ORTHANT_INTERIOR
            lo, hi = 1, b
        for x in range(lo, hi + 1):
            prefix[level] = x
            g2 = gcd(g, x)
            if last:
                if g2 == 1:
                    out.append(tuple(prefix))
            else:
                rem = remaining if infinite else remaining - abs(x) ** q
                descend(level + 1, rem, g2, started or x != 0)

    descend(0, budget, 0, False)
    return out


def _ball_budget_count(d: int, budget: int, q: int) -> int:
    """Lattice points with sum of |x_i|^q at most `budget` (finite q >= 2).

    The budget need not be a perfect q-th power; the Moebius sieve scales
    balls by rational factors, so the threshold must stay exact.
    """
    if budget < 0:
        return 0
    if d == 1:
        return 2 * _int_root(budget, q) + 1

    def sweep(level: int, remaining: int) -> int:
        b = _int_root(remaining, q)
        if level == d - 1:
            return 2 * b + 1
        total = 0
        for x in range(-b, b + 1):
            total += sweep(level + 1, remaining - abs(x) ** q)
        return total

    return sweep(0, budget)


def lattice_count_ball(d: int, n: int, q=1, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exact number of lattice points in the closed ball of q-norm radius n.

    Closed forms for the 1-norm and sup-norm; other norms are counted by a
    nested sweep whose innermost axis is summed in one step.
    """
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    if n < 0:
        raise DomainError(f"radius must be >= 0, got {n}")
    _check_norm(q)
    if q == 1:
        return sum((1 << i) * comb(d, i) * comb(n, i) for i in range(d + 1))
    if q == INF:
        return (2 * n + 1) ** d
    est = (2 * n + 1) ** d
    if est > cap:
        raise ResourceLimitError(
            f"estimated {est} enumeration candidates exceeds cap of {cap}"
        )
    return _ball_budget_count(d, n**q, q)


class _CoprimeCounter:
    """#{x in [1, r] : gcd(x, g) = 1} with cached cumulative rows for small g."""

    def __init__(self, nmax: int):
        self.nmax = nmax
        self.rows: dict[int, array] = {}

    def count(self, g: int, r: int) -> int:
        if r <= 0:
            return 0
        if g == 1:
            return r
        if g <= _SMALL_GCD_MAX:
            row = self.rows.get(g)
            if row is None:
                row = array("l", [0] * (self.nmax + 1))
                c = 0
                for x in range(1, self.nmax + 1):
                    if gcd(x, g) == 1:
                        c += 1
                    row[x] = c
                self.rows[g] = row
            return row[r]
        return sum(1 for x in range(1, r + 1) if gcd(x, g) == 1)


def count_by_enumeration(
    d: int, p: int, q=1, region: Region = Region.CANONICAL_HALF, cap: int = DEFAULT_ENUM_CAP
) -> CountReport:
    """Count primitive points by direct enumeration (no Moebius weights).

    Serves as the independent oracle for the sieve route. The innermost
    coordinate is aggregated through per-gcd coprime counts, the rest of
    the walk is a plain sweep of the ball.
    """
    _check_enum_args(d, p, q, cap)
    if not isinstance(region, Region):
        raise DomainError(f"unknown region {region!r}")

    if d == 1:
        n = 2 if region is Region.FULL_BALL else 1
        count = n if p >= 1 else 0
        return CountReport(d, p, q, region, count, "enumeration")

    infinite = q == INF
    cop = _CoprimeCounter(p).count

    def leaf(g: int, r: int, started: bool) -> int:
        # count admissible values of the last coordinate given prefix gcd g
        if region is Region.ORTHANT_INTERIOR:
            return cop(g, r)  # x in [1, r]; prefix coords >= 1 so g >= 1
        if region is Region.POSITIVE_ORTHANT:
            if g == 0:
                return 1 if r >= 1 else 0  # prefix zero: only x = 1
            return cop(g, r) + (1 if g == 1 else 0)  # x in [0, r]
        if region is Region.CANONICAL_HALF and not started:
            return 1 if r >= 1 else 0  # prefix zero: only x = 1
        if g == 0:
            return 2 if r >= 1 else 0  # full ball, zero prefix: x = +-1
        return 2 * cop(g, r) + (1 if g == 1 else 0)  # x in [-r, r]

    def sweep(level: int, remaining: int, g: int, started: bool) -> int:
        b = p if infinite else _int_root(remaining, q)
        if level == d - 1:
            return leaf(g, b, started)
        if region is Region.FULL_BALL:
            lo, hi = -b, b
        elif region is Region.CANONICAL_HALF:
            lo, hi = (-b, b) if started else (0, b)
        elif region is Region.POSITIVE_ORTHANT:
            lo, hi = 0, b
        else:
            lo, hi = 1, b
        total = 0
        for x in range(lo, hi + 1):
            rem = remaining if infinite else remaining - abs(x) ** q
            total += sweep(level + 1, rem, gcd(g, x), started or x != 0)
        return total

    count = sweep(0, 0 if infinite else p**q, 0, False)
    return CountReport(d, p, q, region, count, "enumeration")


def count_primitive_sieve(
    d: int, p: int, q=1, region: Region = Region.CANONICAL_HALF, cap: int = DEFAULT_ENUM_CAP
) -> CountReport:
    """Count primitive points by the Moebius sieve over scaled balls.

    full ball:      sum_{m=1}^{p} mu(m) * (|ball scaled down by m| - 1)
    canonical half: exactly half of the full-ball count.

    The scaled ball is |B(d, p//m)| for the 1-norm and sup-norm, whose
    lattice norms are integers; for finite q >= 2 the exact threshold
    sum |x_i|^q <= p^q / m^q is used, since rounding the radius first
    would drop points and break agreement with enumeration.

    Only these two regions scale with the lattice (x -> m*x), which is what
    the inversion needs; other regions raise UnsupportedRegionError and
    should be counted by enumeration instead.
    """
    if d < 2:
        raise DomainError(f"sieve counting requires dimension >= 2, got {d}")
    if p < 1:
        raise DomainError(f"sieve counting requires radius >= 1, got {p}")
    _check_norm(q)
    if region not in (Region.FULL_BALL, Region.CANONICAL_HALF):
        raise UnsupportedRegionError(
            f"sieve supports full_ball and canonical_half only, not {region.value};"
            " fall back to enumeration"
        )
    if q not in (1, INF):
        est = (2 * p + 1) ** d
        if est > cap:
            raise ResourceLimitError(
                f"estimated {est} enumeration candidates exceeds cap of {cap}"
            )
    mu = _mu_upto(p)
    full = 0
    for m in range(1, p + 1):
        w = mu[m]
        if not w:
            continue
        if q in (1, INF):
            full += w * (lattice_count_ball(d, p // m, q, cap) - 1)
        else:
            full += w * (_ball_budget_count(d, p**q // m**q, q) - 1)
    if region is Region.FULL_BALL:
        return CountReport(d, p, q, region, full, "sieve")
    half, odd = divmod(full, 2)
    if odd:
        raise DomainError(f"full-ball primitive count {full} is odd")  # unreachable
    return CountReport(d, p, q, region, half, "sieve")


def count_primitive(
    d: int,
    p: int,
    q=1,
    region: Region = Region.CANONICAL_HALF,
    method: str = "auto",
    cap: int = DEFAULT_ENUM_CAP,
) -> CountReport:
    """Count primitive points, choosing the sieve whenever it applies."""
    if method == "sieve":
        return count_primitive_sieve(d, p, q, region, cap)
    if method == "enumeration":
        return count_by_enumeration(d, p, q, region, cap)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")
    if d >= 2 and p >= 1 and region in (Region.FULL_BALL, Region.CANONICAL_HALF):
        return count_primitive_sieve(d, p, q, region, cap)
    return count_by_enumeration(d, p, q, region, cap)


def count_orthant_interior(i: int, p: int, q=1, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Primitive points of the i-dimensional ball with every coordinate >= 1.

    These are the per-face generator counts behind the orthant decompositions
    of the ball; in dimension one the count is 1 for every radius >= 1.
    """
    if i < 1:
        raise DomainError(f"dimension must be >= 1, got {i}")
    if p < 1:
        raise DomainError(f"radius must be >= 1, got {p}")
    return count_by_enumeration(i, p, q, Region.ORTHANT_INTERIOR, cap).count
