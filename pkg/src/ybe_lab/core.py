"""Finite involutive Yang-Baxter solutions stored as sigma tables.

A solution on X = {0..n-1} is an n x n table with sigma[x][y] = sigma_x(y)
whose rows are bijections, such that r(x, y) = (sigma_x(y), tau_y(x))
satisfies the braid relation and r . r = id. The right action tau is not
free data: tau_y(x) = sigma^{-1}_{sigma_x(y)}(x), and that derived table
is cached on the Solution.

Equivalently, sigma satisfies the cycle condition

    sigma^{-1}_{sigma^{-1}_a(b)} sigma^{-1}_a = sigma^{-1}_{sigma^{-1}_b(a)} sigma^{-1}_b

for all a, b, with the diagonal map T(a) = sigma^{-1}_a(a) a bijection.
verify_solution runs both characterizations and reports each flag, so the
two routes cross-check each other on every call.
"""

import json
from dataclasses import dataclass

from .errors import AxiomViolation, NotBijectiveRow, NotNonDegenerate
from .perm import Perm, inverse, is_perm


@dataclass(frozen=True)
class Solution:
    """Immutable validated solution; sigma[x][y] = sigma_x(y), tau[y][x] = tau_y(x)."""

    n: int
    sigma: tuple[Perm, ...]
    tau: tuple[Perm, ...]


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of every axiom check; first_failure is a braid or cycle witness triple."""

    bijective_rows: bool
    cycle_condition: bool
    non_degenerate: bool
    braid: bool
    involutive: bool
    first_failure: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return (
            self.bijective_rows
            and self.cycle_condition
            and self.non_degenerate
            and self.braid
            and self.involutive
        )


def _rows(s) -> tuple[Perm, ...]:
    """Accept a Solution or a raw table; return the sigma rows as tuples."""
    if isinstance(s, Solution):
        return s.sigma
    rows = tuple(tuple(row) for row in s)
    n = len(rows)
    if n == 0:
        raise ValueError("empty table")
    for row in rows:
        if len(row) != n:
            raise ValueError("table is not square")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"entry {v!r} outside [0, {n})")
    return rows


def tau_from_sigma(s) -> tuple[Perm, ...]:
    """Derived right action: tau[y][x] = sigma^{-1}_{sigma_x(y)}(x).

    Rows of sigma must be bijective. This is the unique table making
    (sigma, tau) involutive.
    """
    rows = _rows(s)
    n = len(rows)
    inv = [inverse(row) for row in rows]
    return tuple(
        tuple(inv[rows[x][y]][x] for x in range(n)) for y in range(n)
    )


def check_cycle_condition(s) -> tuple[bool, tuple[int, int, int] | None]:
    """Evaluate the cycle condition on all triples.

    Returns (True, None) or (False, witness) with the lexicographically
    first failing (a, b, c). Rows must be bijective.
    """
    rows = _rows(s)
    n = len(rows)
    inv = [inverse(row) for row in rows]
    for a in range(n):
        qa = inv[a]
        for b in range(n):
            if a == b:
                continue
            qb = inv[b]
            qu = inv[qa[b]]
            qv = inv[qb[a]]
            for c in range(n):
                if qu[qa[c]] != qv[qb[c]]:
                    return False, (a, b, c)
    return True, None


def t_map(s) -> Perm:
    """Diagonal map T(a) = sigma^{-1}_a(a); raises NotNonDegenerate if not bijective."""
    rows = _rows(s)
    img = tuple(inverse(row)[a] for a, row in enumerate(rows))
    if not is_perm(img):
        raise NotNonDegenerate("diagonal map is not a bijection")
    return img


def _braid_witness(rows, tau) -> tuple[int, int, int] | None:
    # r(x,y) = (rows[x][y], tau[y][x]); compare the two triple composites
    # (id x r)(r x id)(id x r) and (r x id)(id x r)(r x id), rightmost
    # factor applied first. Witness is the lexicographically first failure.
    n = len(rows)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                u, v = rows[y][z], tau[z][y]
                p, q = rows[x][u], tau[u][x]
                lhs = (p, rows[q][v], tau[v][q])

                a, b = rows[x][y], tau[y][x]
                c, d = rows[b][z], tau[z][b]
                rhs = (rows[a][c], tau[c][a], d)
                if lhs != rhs:
                    return (x, y, z)
    return None


def _involutive_ok(rows, tau) -> bool:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            u, v = rows[x][y], tau[y][x]
            if rows[u][v] != x or tau[v][u] != y:
                return False
    return True


def verify_solution(s) -> VerifyReport:
    """Run both verification routes on a raw table (or Solution).

    Route one derives tau and checks the braid relation and involutivity
    of r; route two checks the cycle condition and bijectivity of the
    diagonal map. When rows are not bijective nothing else is checkable
    and all flags are reported False.
    """
    rows = _rows(s)
    if not all(is_perm(row) for row in rows):
        return VerifyReport(False, False, False, False, False, None)
    cycle_ok, cycle_wit = check_cycle_condition(rows)
    diag = tuple(inverse(row)[a] for a, row in enumerate(rows))
    nd = is_perm(diag)
    tau = tau_from_sigma(rows)
    braid_wit = _braid_witness(rows, tau)
    involutive = _involutive_ok(rows, tau)
    first = braid_wit if braid_wit is not None else cycle_wit
    return VerifyReport(True, cycle_ok, nd, braid_wit is None, involutive, first)


def solution_from_table(n: int, sigma) -> Solution:
    """Validate a sigma table and build the Solution (tau derived, cached).

    Raises NotBijectiveRow for the first non-bijective row, AxiomViolation
    with the full report when any axiom fails.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("carrier size must be a positive integer")
    rows = _rows(sigma)
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    for x, row in enumerate(rows):
        if not is_perm(row):
            raise NotBijectiveRow(x)
    report = verify_solution(rows)
    if not report.ok:
        raise AxiomViolation(report)
    return Solution(n, rows, tau_from_sigma(rows))


def solution_to_json(s: Solution) -> str:
    """Serialize as {"n": ..., "sigma": [[...], ...]}; tau is never serialized."""
    return json.dumps(
        {"n": s.n, "sigma": [list(row) for row in s.sigma]},
        separators=(",", ":"),
    )


def solution_from_json(text: str) -> Solution:
    """Parse and fully validate the JSON form produced by solution_to_json."""
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "sigma" not in data:
        raise ValueError('expected an object with "n" and "sigma"')
    return solution_from_table(data["n"], data["sigma"])
