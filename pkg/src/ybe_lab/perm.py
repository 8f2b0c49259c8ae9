"""Permutation arithmetic and small permutation groups.

Permutations are image tuples: p[i] is the image of i under p. Groups are
stored by explicit element sets computed by breadth-first closure from
generators; every group this library touches is tiny (at most a few
hundred elements), so no stabilizer chains are needed.
"""

import math
import os
from dataclasses import dataclass

from .errors import DegreeMismatch, InternalError, NotAbelian, SizeLimitExceeded
from .util import factorize

Perm = tuple[int, ...]

DEFAULT_MAX_CLOSURE = 10**6
MAX_CLOSURE_ENV = "YBE_LAB_MAX_CLOSURE"


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(img) -> bool:
    """True iff img is the image array of a permutation of {0..n-1}."""
    n = len(img)
    seen = [False] * n
    for v in img:
        if not isinstance(v, int) or not 0 <= v < n or seen[v]:
            return False
        seen[v] = True
    return True


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p compose q)(i) = p[q[i]]."""
    if len(p) != len(q):
        raise DegreeMismatch(f"degrees {len(p)} and {len(q)} differ")
    return tuple(p[v] for v in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    """k-th compositional power; negative k means powers of the inverse."""
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    while k:
        if k & 1:
            result = compose(result, p)
        p = compose(p, p)
        k >>= 1
    return result


def order(p: Perm) -> int:
    """Multiplicative order: lcm of the cycle lengths."""
    n = len(p)
    seen = [False] * n
    result = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        result = math.lcm(result, length)
    return result


@dataclass(frozen=True)
class PermGroup:
    """A concrete permutation group: all elements, plus its point orbits."""

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    orbit_partition: tuple[tuple[int, ...], ...]


def _orbits(n: int, gens) -> tuple[tuple[int, ...], ...]:
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        parts.append(tuple(sorted(comp)))
    return tuple(parts)


def group_closure(gens, max_size: int | None = None) -> PermGroup:
    """Close a nonempty generator list under composition.

    max_size defaults to the YBE_LAB_MAX_CLOSURE environment variable, or
    10**6; exceeding it raises SizeLimitExceeded before memory does.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("at least one generator required")
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DegreeMismatch("generators act on different carriers")
        if not is_perm(g):
            raise ValueError(f"generator {g} is not a permutation")
    if max_size is None:
        max_size = int(os.environ.get(MAX_CLOSURE_ENV, DEFAULT_MAX_CLOSURE))
    e = identity(n)
    elements = {e}
    frontier = [e]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                p = compose(g, h)
                if p not in elements:
                    if len(elements) >= max_size:
                        raise SizeLimitExceeded(
                            f"closure exceeds {max_size} elements"
                        )
                    elements.add(p)
                    new.append(p)
        frontier = new
    return PermGroup(n, tuple(gens), tuple(sorted(elements)), _orbits(n, gens))


def is_transitive(group: PermGroup) -> bool:
    return len(group.orbit_partition) == 1


def is_abelian(group: PermGroup) -> bool:
    """Generator pairs commuting is enough."""
    gens = group.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if compose(gens[i], gens[j]) != compose(gens[j], gens[i]):
                return False
    return True


def is_regular(group: PermGroup) -> bool:
    """Transitive with exactly one element per point."""
    return is_transitive(group) and len(group.elements) == group.degree


def is_cyclic(group: PermGroup) -> bool:
    """True iff some element has order equal to the group order."""
    target = len(group.elements)
    return any(order(p) == target for p in group.elements)


def _ilog(count: int, p: int) -> int:
    e = 0
    while count > 1:
        if count % p:
            raise InternalError("subgroup count is not a prime power")
        count //= p
        e += 1
    return e


def _sylow_type(orders, p: int) -> list[int]:
    # Exponent partition (e1 >= e2 >= ...) of the Sylow p-subgroup of an
    # abelian group, recovered from how many elements have order dividing
    # p^k for each k.
    pvals = []
    for o in orders:
        j = 0
        while o % p == 0:
            o //= p
            j += 1
        if o == 1:
            pvals.append(j)
    logs = [0]
    k = 1
    while True:
        cnt = sum(1 for j in pvals if j <= k)
        logs.append(_ilog(cnt, p))
        if cnt == len(pvals):
            break
        k += 1
    parts_ge = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
    exps = []
    j = 1
    while True:
        e_j = sum(1 for m in parts_ge if m >= j)
        if e_j == 0:
            break
        exps.append(e_j)
        j += 1
    return exps


def invariant_factors(group: PermGroup) -> tuple[int, ...]:
    """Invariant factor decomposition (d1 | d2 | ... | dt, all >= 2).

    The trivial group yields the empty tuple. Raises NotAbelian on
    non-abelian input.
    """
    if not is_abelian(group):
        raise NotAbelian("invariant factors need an abelian group")
    m = len(group.elements)
    if m == 1:
        return ()
    orders = [order(p) for p in group.elements]
    types = {p: _sylow_type(orders, p) for p in factorize(m)}
    depth = max(len(v) for v in types.values())
    chain = []
    for idx in range(depth):
        f = 1
        for p, exps in types.items():
            if idx < len(exps):
                f *= p ** exps[idx]
        chain.append(f)
    chain.reverse()
    return tuple(chain)
