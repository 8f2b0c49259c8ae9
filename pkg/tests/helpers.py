"""Test oracles written independently of the library internals.

Everything here recomputes definitions from scratch on plain lists and
dicts so that library results are checked against a second code path,
not against themselves.
"""

import random


def oracle_is_solution(table) -> bool:
    """Accept iff the table is an involutive non-degenerate solution.

    Builds the pair map r explicitly and checks r.r = id plus the braid
    relation on every triple, step by step.
    """
    n = len(table)
    for row in table:
        if sorted(row) != list(range(n)):
            return False
    # inv[x][v] = y  with table[x][y] = v
    inv = [[0] * n for _ in range(n)]
    for x, row in enumerate(table):
        for y, v in enumerate(row):
            inv[x][v] = y
    r = {}
    for x in range(n):
        for y in range(n):
            u = table[x][y]
            r[(x, y)] = (u, inv[u][x])
    for pair, image in r.items():
        if r[image] != pair:
            return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                b, c = r[(y, z)]
                a, b2 = r[(x, b)]
                c2, d = r[(b2, c)]
                lhs = (a, c2, d)
                e, f = r[(x, y)]
                g, h = r[(f, z)]
                i, j = r[(e, g)]
                rhs = (i, j, h)
                if lhs != rhs:
                    return False
    return True


def oracle_cycle_witness(table):
    """First (a, b, c) failing the cycle condition, or None."""
    n = len(table)
    inv = [[0] * n for _ in range(n)]
    for x, row in enumerate(table):
        for y, v in enumerate(row):
            inv[x][v] = y
    for a in range(n):
        for b in range(n):
            for c in range(n):
                u = inv[a][b]
                v = inv[b][a]
                if inv[u][inv[a][c]] != inv[v][inv[b][c]]:
                    return (a, b, c)
    return None


def relabel(sigma, g):
    """Conjugate table: new row at g(x) is g . sigma_x . g^{-1}."""
    n = len(sigma)
    ginv = [0] * n
    for i, v in enumerate(g):
        ginv[v] = i
    return [[g[sigma[ginv[x]][ginv[y]]] for y in range(n)] for x in range(n)]


def aut_by_filtering(sigma):
    """All relabelings fixing the table, found by scanning n! permutations."""
    import itertools

    n = len(sigma)
    out = []
    for g in itertools.permutations(range(n)):
        if relabel(sigma, g) == [list(row) for row in sigma]:
            out.append(g)
    return out


def random_bijective_table(rng: random.Random, n: int):
    table = []
    for _ in range(n):
        row = list(range(n))
        rng.shuffle(row)
        table.append(row)
    return table


def random_solution_tables(rng: random.Random, n: int, count: int):
    """Rejection-sample `count` tables accepted by the oracle."""
    out = []
    while len(out) < count:
        t = random_bijective_table(rng, n)
        if oracle_is_solution(t):
            out.append(t)
    return out
