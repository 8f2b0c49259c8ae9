import pytest

from helpers import oracle_is_solution
from ybe_lab.construct import (
    CParams,
    build_c,
    build_nonabelian_example,
    c_params_valid,
    delta,
    inverse_isotope,
    pi_isotope,
)
from ybe_lab.core import solution_from_table, tau_from_sigma, verify_solution
from ybe_lab.errors import (
    CarrierTooSmall,
    ConditionFailed,
    InvalidParams,
    NotMplAtMost2,
    NotTwoReductive,
)
from ybe_lab.perm import group_closure, is_abelian, is_regular, is_transitive
from ybe_lab.retract import is_2_reductive, is_mpl_at_most_2, mpl

LEVEL3 = [[0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 3, 2], [1, 0, 3, 2]]


def test_c_params_valid():
    assert c_params_valid(1, 1, 0)
    assert c_params_valid(1, 4, 0)
    assert c_params_valid(1, 4, 2)
    assert c_params_valid(2, 2, 0)
    assert c_params_valid(2, 4, 0)
    assert c_params_valid(2, 8, 0)
    assert c_params_valid(2, 8, 2)
    assert c_params_valid(4, 4, 0)

    assert not c_params_valid(1, 4, 1)  # 4 does not divide 1
    assert not c_params_valid(1, 4, 3)  # 4 does not divide 9
    assert not c_params_valid(2, 8, 1)
    assert not c_params_valid(2, 8, 4)  # r out of range
    assert not c_params_valid(1, 1, 1)
    assert not c_params_valid(4, 2, 0)  # n1 does not divide n2
    assert not c_params_valid(3, 4, 0)
    assert not c_params_valid(0, 4, 0)
    assert not c_params_valid(2, 0, 0)
    assert not c_params_valid(1, 4, -1)


def test_build_c_rejects_invalid_params():
    with pytest.raises(InvalidParams):
        build_c((1, 4, 1))
    with pytest.raises(InvalidParams):
        build_c((4, 2, 0))


def test_build_c_smallest_members():
    assert build_c((1, 1, 0)).sigma == ((0,),)
    assert build_c((1, 2, 0)).sigma == ((1, 0), (1, 0))
    assert build_c((1, 4, 0)).sigma == ((1, 2, 3, 0),) * 4
    assert build_c((1, 4, 2)).sigma == (
        (1, 2, 3, 0),
        (3, 0, 1, 2),
        (1, 2, 3, 0),
        (3, 0, 1, 2),
    )
    assert build_c((2, 2, 0)).sigma == (
        (1, 0, 3, 2),
        (3, 2, 1, 0),
        (1, 0, 3, 2),
        (3, 2, 1, 0),
    )


def test_build_c_matches_pointwise_formula():
    # recompute sigma directly from the two-coordinate formula
    for p in (CParams(2, 4, 0), CParams(2, 8, 2), CParams(3, 3, 0)):
        s = build_c(p)
        for a in range(p.n1):
            for i in range(p.n2):
                d = delta(p, a, i)
                row = s.sigma[a * p.n2 + i]
                for b in range(p.n1):
                    for j in range(p.n2):
                        expected = ((b + d) % p.n1) * p.n2 + (j + p.r * d + 1) % p.n2
                        assert row[b * p.n2 + j] == expected


def test_delta_values():
    p = CParams(2, 8, 2)
    assert delta(p, 0, 0) == 0
    assert delta(p, 0, 5) == 5
    assert delta(p, 1, 0) == 6
    assert delta(p, 1, 3) == 1


def test_delta_determines_the_row():
    # equal rows are exactly equal translation data (d mod n1, r*d mod n2)
    p = CParams(2, 8, 2)
    s = build_c(p)
    for a1 in range(2):
        for i1 in range(8):
            d1 = delta(p, a1, i1)
            for a2 in range(2):
                for i2 in range(8):
                    d2 = delta(p, a2, i2)
                    same = s.sigma[a1 * 8 + i1] == s.sigma[a2 * 8 + i2]
                    key1 = (d1 % p.n1, p.r * d1 % p.n2)
                    key2 = (d2 % p.n1, p.r * d2 % p.n2)
                    assert same == (key1 == key2)


def test_build_c_members_are_solutions():
    for p in ((1, 6, 0), (2, 4, 0), (1, 8, 4), (2, 8, 2), (3, 3, 0), (1, 9, 3)):
        s = build_c(p)
        assert verify_solution(s).ok
        assert oracle_is_solution([list(r) for r in s.sigma])
        assert s.tau == tau_from_sigma(s.sigma)


def test_build_c_group_structure():
    for p in ((1, 8, 4), (2, 4, 0), (2, 8, 2)):
        s = build_c(p)
        g = group_closure(sorted(set(s.sigma)))
        assert is_transitive(g) and is_abelian(g) and is_regular(g)
        assert len(g.elements) == s.n
        assert is_mpl_at_most_2(s)


def test_pi_isotope_of_constant_base():
    base = solution_from_table(3, [(0, 1, 2)] * 3)
    pi = (1, 2, 0)
    s = pi_isotope(base, pi)
    assert s.sigma == (pi, pi, pi)


def test_pi_isotope_input_checks():
    base = solution_from_table(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        pi_isotope(base, (0, 0))
    with pytest.raises(ValueError):
        pi_isotope(base, (0, 1, 2))


def test_pi_isotope_needs_2_reductive_base():
    with pytest.raises(NotTwoReductive):
        pi_isotope(build_c((1, 4, 2)), (0, 1, 2, 3))


def test_pi_isotope_condition_failure():
    base = solution_from_table(
        4, [(0, 1, 2, 3), (2, 3, 0, 1), (0, 1, 2, 3), (2, 3, 0, 1)]
    )
    assert is_2_reductive(base)
    with pytest.raises(ConditionFailed) as info:
        pi_isotope(base, (1, 0, 2, 3))
    assert (info.value.x, info.value.y) == (0, 1)


def test_inverse_isotope_is_2_reductive():
    s = build_c((1, 4, 2))
    red = inverse_isotope(s, 0)
    assert red.sigma == ((0, 1, 2, 3), (2, 3, 0, 1), (0, 1, 2, 3), (2, 3, 0, 1))
    assert is_2_reductive(red)
    assert red.sigma[0] == (0, 1, 2, 3)


def test_inverse_isotope_input_checks():
    s = build_c((1, 4, 2))
    with pytest.raises(ValueError):
        inverse_isotope(s, 4)
    with pytest.raises(ValueError):
        inverse_isotope(s, -1)
    with pytest.raises(NotMplAtMost2):
        inverse_isotope(solution_from_table(4, LEVEL3), 0)
    with pytest.raises(CarrierTooSmall):
        inverse_isotope(solution_from_table(1, [[0]]), 0)


def test_isotopes_are_mutually_inverse():
    for p in ((1, 4, 2), (2, 2, 0), (2, 4, 0), (1, 8, 4), (2, 8, 2)):
        s = build_c(p)
        for e in range(s.n):
            red = inverse_isotope(s, e)
            assert is_2_reductive(red)
            back = pi_isotope(red, s.sigma[e])
            assert back.sigma == s.sigma


def test_pi_isotope_output_has_level_at_most_2():
    for p in ((1, 4, 2), (2, 4, 0)):
        s = build_c(p)
        red = inverse_isotope(s, 0)
        assert is_mpl_at_most_2(pi_isotope(red, s.sigma[0]))


def test_nonabelian_example_small_cases():
    assert build_nonabelian_example(1).sigma == ((1, 0), (1, 0))
    s2 = build_nonabelian_example(2)
    g2 = group_closure(sorted(set(s2.sigma)))
    assert is_abelian(g2)
    with pytest.raises(ValueError):
        build_nonabelian_example(0)


def test_nonabelian_example_structure():
    for n in (3, 4, 5):
        s = build_nonabelian_example(n)
        assert s.n == 2 * n
        assert verify_solution(s).ok
        assert oracle_is_solution([list(r) for r in s.sigma])
        g = group_closure(sorted(set(s.sigma)))
        assert is_transitive(g)
        assert is_regular(g)
        assert len(g.elements) == 2 * n
        assert not is_abelian(g)
        assert mpl(s) == 2


def test_nonabelian_example_is_a_mesh_isotope():
    # rows of the 2-reductive mesh (b, j) -> (b + i, j), twisted by
    # pi((a, i)) = (-a, 1 - i)
    n = 3
    mesh = []
    for a in range(n):
        for i in range(2):
            mesh.append(
                tuple(2 * ((b + i) % n) + j for b in range(n) for j in range(2))
            )
    base = solution_from_table(2 * n, mesh)
    assert is_2_reductive(base)
    pi = tuple(
        2 * ((-a) % n) + (1 - i) for a in range(n) for i in range(2)
    )
    assert pi_isotope(base, pi).sigma == build_nonabelian_example(n).sigma
