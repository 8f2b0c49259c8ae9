"""Isomorphism, parameter recovery, counting, and the exhaustive oracle.

Two solutions are isomorphic when a bijection phi of carriers satisfies
phi(sigma_x(y)) = sigma'_{phi(x)}(phi(y)) for all x, y. For eligible
solutions (indecomposable, abelian permutation group, level <= 2) the
parameter triple of the isomorphic family member is recovered directly
from the structure: n2 is the common row order, n1 = n/n2, and r is the
unique exponent with sigma_{sigma_e(e)}^{n1} = sigma_e^{(r+1)*n1}.

Counting: with k the largest integer whose square divides n, the family
has exactly sum over d | k of k/d members on n points (k of which have
cyclic permutation group), and distinct triples are never isomorphic.
"""

import itertools
from typing import NamedTuple

from .construct import CParams, build_c, c_params_valid
from .core import Solution, solution_from_table
from .errors import (
    BoundExceeded,
    NotAbelian,
    NotIndecomposable,
    NotMplAtMost2,
    StructureViolation,
)
from .perm import (
    Perm,
    compose,
    group_closure,
    inverse,
    is_abelian,
    is_transitive,
    invariant_factors,
    order,
    power,
)
from .retract import is_mpl_at_most_2, mpl
from .util import divisors, square_part

DEFAULT_ORACLE_BOUND = 5


class ClassifyOutcome(NamedTuple):
    params: CParams
    phi: Perm


def _solution_group(s: Solution):
    return group_closure(sorted(set(s.sigma)))


def _invariants(s: Solution):
    """Cheap isomorphism invariants used for quick rejection and bucketing."""
    g = _solution_group(s)
    ab = is_abelian(g)
    return (
        s.n,
        tuple(sorted(order(row) for row in s.sigma)),
        len(g.elements),
        ab,
        invariant_factors(g) if ab else None,
        is_transitive(g),
        mpl(s),
    )


def _full_check(sig1, sig2, phi) -> bool:
    n = len(sig1)
    return all(
        phi[sig1[x][y]] == sig2[phi[x]][phi[y]]
        for x in range(n)
        for y in range(n)
    )


def _iso_search(sig1, sig2, find_all: bool) -> list[Perm]:
    """Backtracking search for structure-preserving bijections.

    Anchors phi(0) on every order-compatible target, then propagates the
    forced images phi(sigma_x(y)) = sigma'_{phi(x)}(phi(y)) to closure;
    remaining choice points branch on the unmapped point with fewest
    candidates. Results come in deterministic order; with find_all the
    list is every certificate, otherwise at most one.
    """
    n = len(sig1)
    ord1 = [order(row) for row in sig1]
    ord2 = [order(row) for row in sig2]
    results: list[Perm] = []

    def propagate(phi, used, stack, assigned) -> bool:
        while stack:
            u = stack.pop()
            for v in list(assigned):
                for x, y in ((u, v), (v, u)):
                    z = sig1[x][y]
                    w = sig2[phi[x]][phi[y]]
                    pz = phi[z]
                    if pz == -1:
                        if w in used:
                            return False
                        phi[z] = w
                        used.add(w)
                        assigned.append(z)
                        stack.append(z)
                    elif pz != w:
                        return False
        return True

    def extend(phi, used, assigned) -> bool:
        if len(assigned) == n:
            if _full_check(sig1, sig2, phi):
                results.append(tuple(phi))
                return not find_all
            return False
        best_x = -1
        best_cands: list[int] = []
        for x in range(n):
            if phi[x] != -1:
                continue
            cands = [t for t in range(n) if t not in used and ord2[t] == ord1[x]]
            if not cands:
                return False
            if best_x == -1 or len(cands) < len(best_cands):
                best_x, best_cands = x, cands
                if len(cands) == 1:
                    break
        for t in best_cands:
            phi2 = phi[:]
            used2 = set(used)
            assigned2 = assigned[:]
            phi2[best_x] = t
            used2.add(t)
            assigned2.append(best_x)
            if propagate(phi2, used2, [best_x], assigned2):
                if extend(phi2, used2, assigned2):
                    return True
        return False

    for t in range(n):
        if ord2[t] != ord1[0]:
            continue
        phi = [-1] * n
        phi[0] = t
        used = {t}
        assigned = [0]
        if propagate(phi, used, [0], assigned):
            if extend(phi, used, assigned) and not find_all:
                return results
    return results


def are_isomorphic(s1: Solution, s2: Solution) -> Perm | None:
    """Certificate phi with phi . sigma_x = sigma'_{phi(x)} . phi, or None.

    Quick-rejects on carrier size, row-order multiset, permutation group
    invariants and multipermutation level before searching.
    """
    if s1.n != s2.n:
        return None
    if _invariants(s1) != _invariants(s2):
        return None
    found = _iso_search(s1.sigma, s2.sigma, find_all=False)
    return found[0] if found else None


def recover_params(s: Solution) -> CParams:
    """Parameter triple of the family member isomorphic to s.

    Eligibility: permutation group transitive (indecomposable), abelian,
    and level <= 2 (trivially satisfied at n = 1); the corresponding
    errors are NotIndecomposable, NotAbelian, NotMplAtMost2. Structural
    facts that the theory guarantees are still checked and raise
    StructureViolation if violated.
    """
    g = _solution_group(s)
    if not is_transitive(g):
        raise NotIndecomposable("permutation group is not transitive")
    if not is_abelian(g):
        raise NotAbelian("permutation group is not abelian")
    if s.n >= 2 and not is_mpl_at_most_2(s):
        raise NotMplAtMost2("multipermutation level exceeds 2")
    row_orders = {order(row) for row in s.sigma}
    if len(row_orders) != 1:
        raise StructureViolation("rows have different orders")
    n2 = row_orders.pop()
    n1, rem = divmod(s.n, n2)
    if rem or n2 % n1:
        raise StructureViolation("row order does not split the carrier")
    rho = s.sigma[0]
    target = power(s.sigma[rho[0]], n1)
    hits = [r for r in range(n2 // n1) if power(rho, (r + 1) * n1) == target]
    if len(hits) != 1:
        raise StructureViolation("power identity did not pin down a unique r")
    r = hits[0]
    if (n1 * r * r) % n2:
        raise StructureViolation("recovered r fails the divisibility constraint")
    return CParams(n1, n2, r)


def explicit_iso_to_c(s: Solution) -> ClassifyOutcome:
    """Recovered parameters plus a verified certificate build_c(params) -> s.

    With e = 0, rho = sigma_e and lam = sigma_{rho(e)} . rho^{-r-1}, the
    certificate is phi(a*n2 + i) = (lam^a . rho^i)(e).
    """
    p = recover_params(s)
    rho = s.sigma[0]
    lam = compose(s.sigma[rho[0]], power(rho, -p.r - 1))
    phi = []
    lam_a = tuple(range(s.n))
    for _ in range(p.n1):
        pt = lam_a[0]
        for _ in range(p.n2):
            phi.append(pt)
            pt = rho[pt]
        lam_a = compose(lam, lam_a)
    phi = tuple(phi)
    member = build_c(p)
    if len(set(phi)) != s.n or not _full_check(member.sigma, s.sigma, phi):
        raise StructureViolation("certificate verification failed")
    return ClassifyOutcome(p, phi)


def count_family(n: int) -> int:
    """Number of family members on n points: sum of k/d over d | k."""
    if n < 1:
        raise ValueError("n must be positive")
    k = square_part(n)
    return sum(k // d for d in divisors(k))


def count_cyclic(n: int) -> int:
    """Number of family members on n points with cyclic permutation group."""
    if n < 1:
        raise ValueError("n must be positive")
    return square_part(n)


def enumerate_family(n: int) -> list[CParams]:
    """All valid triples with n1*n2 = n, lexicographically ordered."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for n1 in divisors(n):
        n2 = n // n1
        if n2 % n1:
            continue
        q = n2 // n1
        # valid r are exactly the multiples of l/n1 where l = n / square_part(n);
        # scanning the q candidates directly is already cheap enough
        for r in range(q):
            if (n1 * r * r) % n2 == 0:
                out.append(CParams(n1, n2, r))
    return out


def exhaustive_enumerate(
    n: int,
    *,
    indecomposable: bool = False,
    abelian: bool = False,
    mpl_le_2: bool = False,
    max_n: int = DEFAULT_ORACLE_BOUND,
) -> list[Solution]:
    """Every solution on n points up to isomorphism, by brute-force search.

    Depth-first over sigma tables row by row in lexicographic order,
    pruning rows that violate the cycle condition on the pairs it already
    determines (and, when the abelian filter is on, rows that fail to
    commute with an earlier row, which any abelian completion needs).
    Completed tables are verified, filtered, and deduplicated by
    are_isomorphic; each class is represented by its lexicographically
    smallest discovered table, which is also discovery order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BoundExceeded(f"exhaustive search bounded at {max_n} points")
    all_perms = sorted(itertools.permutations(range(n)))
    inv_of = {p: inverse(p) for p in all_perms}
    rows: list[Perm] = []
    invs: list[Perm] = []
    reps: list[Solution] = []
    rep_keys: list[tuple] = []

    def newly_complete_pairs_ok() -> bool:
        m = len(rows)
        last = m - 1
        for a in range(m):
            qa = invs[a]
            for b in range(m):
                if a == b:
                    continue
                u = qa[b]
                v = invs[b][a]
                if u >= m or v >= m or max(a, b, u, v) != last:
                    continue
                qb, qu, qv = invs[b], invs[u], invs[v]
                for c in range(n):
                    if qu[qa[c]] != qv[qb[c]]:
                        return False
        return True

    def accept(sol: Solution) -> bool:
        if indecomposable or abelian:
            g = _solution_group(sol)
            if indecomposable and not is_transitive(g):
                return False
            if abelian and not is_abelian(g):
                return False
        if mpl_le_2:
            level = mpl(sol)
            if level is None or level > 2:
                return False
        return True

    def record(sol: Solution) -> None:
        key = _invariants(sol)
        for i, rep in enumerate(reps):
            if rep_keys[i] == key and _iso_search(rep.sigma, sol.sigma, find_all=False):
                return
        reps.append(sol)
        rep_keys.append(key)

    def dfs() -> None:
        if len(rows) == n:
            sol = solution_from_table(n, list(rows))
            if accept(sol):
                record(sol)
            return
        for p in all_perms:
            if abelian and any(compose(p, q) != compose(q, p) for q in rows):
                continue
            rows.append(p)
            invs.append(inv_of[p])
            if newly_complete_pairs_ok():
                dfs()
            rows.pop()
            invs.pop()

    dfs()
    return reps
