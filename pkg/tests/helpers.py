"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately avoid the library's own decision paths:
group elements are enumerated by breadth-first search over the Cayley
graph, and lengths are graph distances, so reducedness and length
claims can be checked against ground truth in the finite presets.
"""

from __future__ import annotations

from fractions import Fraction

from coxverify import linalg, reflection
from coxverify.context import GroupContext
from coxverify.presets import preset_context

_CTX_CACHE: dict[str, GroupContext] = {}


def group(name: str) -> GroupContext:
    if name not in _CTX_CACHE:
        _CTX_CACHE[name] = preset_context(name)
    return _CTX_CACHE[name]


def vec(ctx: GroupContext, *values):
    """Vector with rational coordinates in the simple-root basis."""
    return tuple(ctx.field.rational(v) for v in values)


def cayley_distances(ctx: GroupContext) -> dict:
    """Distance from the identity for every element of a finite group.

    Pure BFS on matrices under right multiplication; independent of the
    descent-based length computation under test.
    """
    start = linalg.identity(ctx.field, ctx.n)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        new = []
        for mat in frontier:
            for i in range(1, ctx.n + 1):
                nxt = reflection._right_mul_simple(ctx, mat, i)
                if nxt not in dist:
                    dist[nxt] = dist[mat] + 1
                    new.append(nxt)
        frontier = new
    return dist


def all_words(ctx: GroupContext, max_len: int):
    """Every word over the generators with length <= max_len."""
    from itertools import product

    for length in range(max_len + 1):
        yield from product(range(1, ctx.n + 1), repeat=length)


def euler_phi(n: int) -> int:
    """Euler's totient by trial division; test-side oracle."""
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def float_matrix(mat):
    return [[float(x) for x in row] for row in mat]


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)
