from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from idcodes.hitting import (
    HittingSetSolver,
    components,
    drop_supersets,
    packing_bound,
)


def brute_hitting(sets, universe):
    for k in range(0, universe + 1):
        for combo in combinations(range(universe), k):
            m = sum(1 << i for i in combo)
            if all(s & m for s in sets):
                return k, list(combo)
    return None


families = st.integers(2, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=12),
    )
)


@settings(max_examples=300, deadline=None)
@given(families)
def test_minimum_and_lex_least_match_enumeration(case):
    n, sets = case
    expected = brute_hitting(sets, n)
    solver = HittingSetSolver()
    k = solver.minimum(sets)
    assert k == expected[0]
    assert solver.lex_least(sets, k) == expected[1]


@settings(max_examples=200, deadline=None)
@given(families)
def test_packing_bound_is_a_lower_bound(case):
    n, sets = case
    fam = drop_supersets(sets)
    assert packing_bound(fam) <= brute_hitting(sets, n)[0]


def test_empty_member_means_no_solution():
    assert HittingSetSolver().minimum([0b11, 0]) is None


def test_components_split_disjoint_supports():
    parts = components([0b0011, 0b0110, 0b1000_0000, 0b1100_0000])
    assert sorted(sorted(p) for p in parts) == [[0b0011, 0b0110], [0b1000_0000, 0b1100_0000]]


def test_drop_supersets():
    assert drop_supersets([0b111, 0b011, 0b011, 0b100]) == (0b100, 0b011)
