"""The canonical family C(n1, n2, r) and the two isotope constructions.

C(n1, n2, r) lives on Z_{n1} x Z_{n2} with n1 | n2, 0 <= r < n2/n1 and
n2 | n1*r^2, flattened by (a, i) -> a*n2 + i. Writing d = i - a*r mod n2,
the left action is

    sigma_{(a,i)}((b,j)) = (b + d mod n1, j + r*d + 1 mod n2),

which is indecomposable, has multipermutation level at most 2, and has
abelian permutation group Z_{n1} x Z_{n2}. Every finite indecomposable
solution of level <= 2 with abelian permutation group is isomorphic to
exactly one member (see classify.recover_params).

The isotopes connect level <= 2 to 2-reductivity: composing every row of a
2-reductive solution with one compatible permutation pi yields a level
<= 2 solution, and composing rows with sigma_e^{-1} undoes it.
"""

from typing import NamedTuple

from .core import Solution, solution_from_table
from .errors import (
    ConditionFailed,
    InternalError,
    InvalidParams,
    NotMplAtMost2,
    NotTwoReductive,
)
from .perm import Perm, compose, inverse, is_perm
from .retract import is_2_reductive, is_mpl_at_most_2


class CParams(NamedTuple):
    n1: int
    n2: int
    r: int


def c_params_valid(n1: int, n2: int, r: int) -> bool:
    """True iff n1 | n2, 0 <= r < n2/n1 and n2 | n1*r^2."""
    return (
        n1 >= 1
        and n2 >= 1
        and n2 % n1 == 0
        and 0 <= r < n2 // n1
        and (n1 * r * r) % n2 == 0
    )


def delta(p: CParams, a: int, i: int) -> int:
    """Row invariant d(a, i) = i - a*r mod n2; rows with equal action share it."""
    return (i - a * p.r) % p.n2


def build_c(p) -> Solution:
    """Build the family member for a valid parameter triple.

    The closed form for tau from the same construction is cross-checked
    against the derived tau; a mismatch is a bug and raises InternalError.
    """
    n1, n2, r = p
    if not c_params_valid(n1, n2, r):
        raise InvalidParams(f"invalid triple ({n1}, {n2}, {r})")
    n = n1 * n2
    sigma = []
    for a in range(n1):
        for i in range(n2):
            d = (i - a * r) % n2
            row = []
            for b in range(n1):
                bb = (b + d) % n1
                base = bb * n2
                for j in range(n2):
                    row.append(base + (j + r * d + 1) % n2)
            sigma.append(tuple(row))
    sol = solution_from_table(n, sigma)
    # closed form: tau_{(b,j)}((a,i)) = (a + b*r - (j+1), i - (j+1)*r + b*r^2 - 1)
    for b in range(n1):
        for j in range(n2):
            ty = sol.tau[b * n2 + j]
            for a in range(n1):
                for i in range(n2):
                    aa = (a + b * r - (j + 1)) % n1
                    ii = (i - (j + 1) * r + b * r * r - 1) % n2
                    if ty[a * n2 + i] != aa * n2 + ii:
                        raise InternalError("closed-form tau disagrees with derived tau")
    return sol


def pi_isotope(s: Solution, pi) -> Solution:
    """Compose every row of a 2-reductive solution with pi.

    Requires is_2_reductive(s) and the compatibility condition
    sigma_{pi(y)} pi sigma_x = sigma_{pi(x)} pi sigma_y for all x, y;
    the first failing pair (lexicographic) is raised as ConditionFailed.
    The result has multipermutation level at most 2.
    """
    pi = tuple(pi)
    if len(pi) != s.n or not is_perm(pi):
        raise ValueError("pi must be a permutation of the carrier")
    if not is_2_reductive(s):
        raise NotTwoReductive("base solution must be 2-reductive")
    for x in range(s.n):
        for y in range(s.n):
            lhs = compose(s.sigma[pi[y]], compose(pi, s.sigma[x]))
            rhs = compose(s.sigma[pi[x]], compose(pi, s.sigma[y]))
            if lhs != rhs:
                raise ConditionFailed(x, y)
    rows = [compose(s.sigma[x], pi) for x in range(s.n)]
    return solution_from_table(s.n, rows)


def inverse_isotope(s: Solution, e: int) -> Solution:
    """Compose every row of a level <= 2 solution with sigma_e^{-1}.

    The result is 2-reductive with identity row at e, and composing its
    rows back with sigma_e recovers s.
    """
    if not 0 <= e < s.n:
        raise ValueError(f"base point {e} outside carrier")
    if not is_mpl_at_most_2(s):
        raise NotMplAtMost2("solution has level greater than 2")
    inv_e = inverse(s.sigma[e])
    rows = [compose(row, inv_e) for row in s.sigma]
    return solution_from_table(s.n, rows)


def build_nonabelian_example(n: int) -> Solution:
    """Indecomposable level-2 witness with non-abelian permutation group.

    Carrier Z_n x {0,1} flattened by (a, i) -> 2a + i, with
    sigma_{(a,i)}((b,j)) = (i - b mod n, 1 - j): the pi-isotope of the
    2-reductive mesh (b, j) -> (b + i, j) by pi((a,i)) = (-a, 1-i). The
    permutation group has order 2n and is non-abelian for n >= 3.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rows = []
    for a in range(n):
        for i in range(2):
            row = []
            for b in range(n):
                bb = (i - b) % n
                for j in range(2):
                    row.append(2 * bb + (1 - j))
            rows.append(tuple(row))
    return solution_from_table(2 * n, rows)
