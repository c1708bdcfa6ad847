"""Primitive point enumeration and the two counting routes.

The ground-truth oracle used throughout is a plain grid walk: take every
lattice point of the bounding box, keep those inside the ball, the region,
and with coordinate gcd one. Everything else must agree with it.
"""

import math
from itertools import product

import pytest

from zonolat import (
    INF,
    DomainError,
    Region,
    ResourceLimitError,
    UnsupportedRegionError,
    canonical_sign,
    count_by_enumeration,
    count_orthant_interior,
    count_primitive,
    count_primitive_sieve,
    enumerate_primitive,
    is_primitive,
    lattice_count_ball,
)
from zonolat.primitive import norm_token, parse_norm


def in_ball(v, p, q) -> bool:
    if q == INF:
        return max(abs(c) for c in v) <= p
    return sum(abs(c) ** q for c in v) <= p**q


def in_region(v, region: Region) -> bool:
    if region is Region.FULL_BALL:
        return True
    if region is Region.CANONICAL_HALF:
        nz = [c for c in v if c != 0]
        return bool(nz) and nz[0] > 0
    if region is Region.POSITIVE_ORTHANT:
        return all(c >= 0 for c in v)
    return all(c >= 1 for c in v)


def grid_primitive(d, p, q, region):
    """Brute-force reference enumeration over the bounding box."""
    out = []
    for v in product(range(-p, p + 1), repeat=d):
        if is_primitive(v) and in_ball(v, p, q) and in_region(v, region):
            out.append(v)
    return sorted(out)


def grid_ball_count(d, n, q):
    return sum(1 for v in product(range(-n, n + 1), repeat=d) if in_ball(v, n, q))


def test_is_primitive_examples():
    assert not is_primitive((0, 0))
    assert not is_primitive((2, 4))
    assert is_primitive((3, 5))
    assert is_primitive((1,))
    assert not is_primitive((0,))
    assert is_primitive((-3, 5))
    assert not is_primitive((-2, -4))


def test_canonical_sign_examples():
    assert canonical_sign((0, -1)) == (0, 1)
    assert canonical_sign((1, -2)) == (1, -2)
    assert canonical_sign((-3, 1)) == (3, -1)


def test_canonical_sign_idempotent():
    for v in [(0, -1), (1, -2), (-3, 1), (0, 0, -5), (-1, 7, 7)]:
        once = canonical_sign(v)
        assert canonical_sign(once) == once


def test_canonical_sign_rejects_zero():
    with pytest.raises(DomainError):
        canonical_sign((0, 0, 0))


def test_enumerate_examples():
    assert enumerate_primitive(2, 1, 1, Region.CANONICAL_HALF) == [(0, 1), (1, 0)]
    got = enumerate_primitive(2, 2, 1, Region.CANONICAL_HALF)
    assert got == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert len(enumerate_primitive(3, 2, 1, Region.CANONICAL_HALF)) == 9


def test_enumerate_is_lexicographic():
    for region in Region:
        out = enumerate_primitive(3, 3, 1, region)
        assert out == sorted(out)


@pytest.mark.parametrize("q", [1, 2, 3, INF])
@pytest.mark.parametrize("region", list(Region))
def test_enumerate_against_grid_oracle(q, region):
    for d in (1, 2, 3):
        for p in (0, 1, 2, 4):
            assert enumerate_primitive(d, p, q, region) == grid_primitive(d, p, q, region)


def test_enumerate_outputs_satisfy_region():
    out = enumerate_primitive(3, 4, 1, Region.CANONICAL_HALF)
    for v in out:
        assert is_primitive(v)
        assert canonical_sign(v) == v
    for v in enumerate_primitive(2, 5, 2, Region.POSITIVE_ORTHANT):
        assert all(c >= 0 for c in v) and is_primitive(v)
    for v in enumerate_primitive(2, 5, INF, Region.ORTHANT_INTERIOR):
        assert all(c >= 1 for c in v)


def test_enumerate_cap_is_named_in_error():
    with pytest.raises(ResourceLimitError, match="cap of 10"):
        enumerate_primitive(3, 100, INF, Region.FULL_BALL, cap=10)


def test_enumerate_domain_errors():
    with pytest.raises(DomainError):
        enumerate_primitive(0, 3)
    with pytest.raises(DomainError):
        enumerate_primitive(2, -1)
    with pytest.raises(DomainError):
        enumerate_primitive(2, 3, 0)
    with pytest.raises(DomainError):
        enumerate_primitive(2, 3, 1, "half")


def test_lattice_count_ball_examples():
    assert lattice_count_ball(2, 2, 1) == 13
    assert lattice_count_ball(2, 0, 1) == 1
    assert lattice_count_ball(2, 1, INF) == 9


@pytest.mark.parametrize("q", [1, 2, 3, INF])
def test_lattice_count_ball_against_grid(q):
    for d in (1, 2, 3):
        for n in range(0, 6):
            assert lattice_count_ball(d, n, q) == grid_ball_count(d, n, q)


def test_lattice_count_ball_binomial_form():
    # the 1-norm closed form, re-derived with an explicit double sum
    for d in (2, 3, 4, 5):
        for n in (0, 1, 3, 7):
            direct = sum(
                2**i * math.comb(d, i) * math.comb(n, i) for i in range(d + 1)
            )
            assert lattice_count_ball(d, n, 1) == direct


def test_sieve_count_examples():
    assert count_primitive_sieve(2, 2, 1, Region.FULL_BALL).count == 8
    assert count_primitive_sieve(2, 1, 1, Region.FULL_BALL).count == 4
    assert count_primitive_sieve(2, 10, 1, Region.CANONICAL_HALF).count == 64


@pytest.mark.parametrize("q", [1, 2, INF])
def test_sieve_equals_enumeration(q):
    for d in (2, 3):
        for p in range(1, 13):
            for region in (Region.FULL_BALL, Region.CANONICAL_HALF):
                sieve = count_primitive_sieve(d, p, q, region)
                enum = count_by_enumeration(d, p, q, region)
                assert sieve.count == enum.count, (d, p, q, region)
                assert sieve.method == "sieve" and enum.method == "enumeration"


def test_counts_match_listing_lengths():
    for q in (1, 2, INF):
        for region in Region:
            for d in (1, 2, 3):
                for p in (0, 1, 3, 5):
                    assert count_by_enumeration(d, p, q, region).count == len(
                        enumerate_primitive(d, p, q, region)
                    )


def test_half_ball_symmetry():
    for d in (2, 3, 4):
        for p in (1, 2, 5, 9):
            full = count_by_enumeration(d, p, 1, Region.FULL_BALL).count
            half = count_by_enumeration(d, p, 1, Region.CANONICAL_HALF).count
            assert full == 2 * half


def totient_sum(p: int) -> int:
    phi = list(range(p + 1))
    for i in range(2, p + 1):
        if phi[i] == i:  # prime
            for j in range(i, p + 1, i):
                phi[j] -= phi[j] // i
    return sum(phi[1 : p + 1])


def test_planar_totient_identity():
    # canonical primitive points of the planar 1-ball: 2 * sum of totients
    for p in (1, 2, 3, 10, 25, 60):
        half = count_primitive_sieve(2, p, 1, Region.CANONICAL_HALF).count
        assert half == 2 * totient_sum(p)


def test_sieve_region_support():
    with pytest.raises(UnsupportedRegionError):
        count_primitive_sieve(2, 5, 1, Region.POSITIVE_ORTHANT)
    with pytest.raises(DomainError):
        count_primitive_sieve(1, 5, 1, Region.FULL_BALL)
    with pytest.raises(DomainError):
        count_primitive_sieve(2, 0, 1, Region.FULL_BALL)


def test_count_primitive_dispatch():
    auto = count_primitive(2, 7, 1, Region.FULL_BALL)
    assert auto.method == "sieve"
    assert auto.count == count_primitive(2, 7, 1, Region.FULL_BALL, method="enumeration").count
    orthant = count_primitive(2, 7, 1, Region.POSITIVE_ORTHANT)
    assert orthant.method == "enumeration"
    with pytest.raises(DomainError):
        count_primitive(2, 7, 1, Region.FULL_BALL, method="magic")


def test_orthant_interior_counts():
    for p in (1, 2, 3, 7):
        for q in (1, 2, INF):
            assert count_orthant_interior(1, p, q) == 1
    assert count_orthant_interior(2, 2, 1) == 1  # only (1, 1)
    assert count_orthant_interior(2, 3, 1) == 3  # (1,1), (1,2), (2,1)


@pytest.mark.parametrize("q", [1, INF])
def test_orthant_subdivision_of_full_ball(q):
    # primitive count of the ball = sum over face dimensions i of
    # 2^i C(d,i) times the all-coordinates-positive count in dimension i
    for d in (2, 3):
        for p in (1, 2, 4, 6):
            full = count_by_enumeration(d, p, q, Region.FULL_BALL).count
            split = sum(
                2**i * math.comb(d, i) * count_orthant_interior(i, p, q)
                for i in range(1, d + 1)
            )
            assert full == split, (d, p, q)


def test_count_report_serialization():
    rep = count_primitive_sieve(2, 3, INF, Region.FULL_BALL)
    assert rep.as_dict() == {
        "d": 2,
        "p": 3,
        "q": "inf",
        "region": "full_ball",
        "count": rep.count,
        "method": "sieve",
    }


def test_norm_parsing():
    assert parse_norm("1") == 1
    assert parse_norm("2") == 2
    assert parse_norm("inf") == INF
    assert parse_norm("Infinity") == INF
    assert norm_token(INF) == "inf"
    assert norm_token(3) == 3
    with pytest.raises(DomainError):
        parse_norm("0")
    with pytest.raises(DomainError):
        parse_norm("fast")
