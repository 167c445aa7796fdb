import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussperiods.cyclostats import (
    GaussParams,
    brute_force_matrix,
    build_tally,
    coset_index_table,
    distribution_from_matrix,
    exponent_pairs,
    is_s_injective,
    s_map,
    star_row,
    tau_distribution,
)
from gaussperiods.errors import ParameterError, TrivialDegreeError
from gaussperiods.ntheory import is_prime, multiplicative_order, primitive_root


def valid_params(k_max, r_max):
    out = []
    for k in range(1, k_max + 1):
        for n in range(2, (r_max - 2) // k + 1):
            if is_prime(n * k + 1):
                out.append(GaussParams(k, n))
    return out


SWEEP = valid_params(10, 2999)


def set_based_matrix(params):
    """t_ij = |(1 + K_i) cap K_j| from explicit coset sets."""
    k, n, r = params.k, params.n, params.r
    K = {x for x in range(1, r) if pow(x, k, r) == 1}
    g = primitive_root(r)
    cosets = [{pow(g, j, r) * x % r for x in K} for j in range(n)]
    return {
        (i, j): len({(1 + x) % r for x in cosets[i]} & cosets[j])
        for i in range(n)
        for j in range(n)
    }


def s_by_search(u, v, w, r):
    """Solve z * (w^u - w^v) = -(1 - w^v) by scanning z."""
    lhs = (pow(w, u, r) - pow(w, v, r)) % r
    rhs = -(1 - pow(w, v, r)) % r
    return next(z for z in range(r) if z * lhs % r == rhs)


def test_params_validation():
    p = GaussParams(6, 3)
    assert p.r == 19
    with pytest.raises(ParameterError):
        GaussParams(6, 4)
    with pytest.raises(TrivialDegreeError):
        GaussParams(4, 1)
    assert GaussParams.from_prime(7, 43) == GaussParams(7, 6)


def test_s_map_example():
    assert s_map(1, 2, 3, 11) == 6
    assert s_by_search(1, 2, 3, 11) == 6


def test_s_map_rejects_non_members():
    with pytest.raises(ParameterError):
        s_map(2, 2, 3, 11)
    with pytest.raises(ParameterError):
        s_map(0, 1, 3, 11)
    with pytest.raises(ParameterError):
        s_map(1, 5, 3, 11)  # 3 has order 5, so v = 5 is v = 0


@pytest.mark.parametrize("params", [GaussParams(5, 2), GaussParams(7, 6), GaussParams(9, 12), GaussParams(12, 9)], ids=str)
def test_s_map_matches_search_and_codomain(params):
    tally = build_tally(params)
    w, r = tally.omega, params.r
    for u, v in exponent_pairs(params.k):
        z = s_map(u, v, w, r)
        assert z == s_by_search(u, v, w, r)
        assert 1 <= z <= r - 2


def test_tally_k5():
    tally = build_tally(GaussParams(5, 2))
    assert tally.total == 12
    # independent: S values by modular search
    w = tally.omega
    direct = Counter(s_by_search(u, v, w, 11) for u, v in exponent_pairs(5))
    assert direct == tally.multiplicity_of_value
    assert Counter(direct.values()) == {1: 6, 2: 3}


def test_tally_k3_injective():
    for params in valid_params(3, 3000):
        if params.k == 3:
            tally = build_tally(params)
            assert tally.total == 2
            assert set(tally.multiplicity_of_value.values()) == {1}


def test_tally_codomain():
    for params in SWEEP:
        tally = build_tally(params)
        assert tally.total == (params.k - 1) * (params.k - 2)
        assert params.r - 1 not in tally.multiplicity_of_value
        assert all(1 <= x <= params.r - 2 for x in tally.multiplicity_of_value)
        if is_s_injective(params):
            assert 1 not in tally.multiplicity_of_value


def test_one_is_a_value_at_an_exceptional_prime():
    # S(u, v) = 1 forces S(u, v) = S(-u, v - u); only injectivity rules it out.
    params = GaussParams(5, 2)
    tally = build_tally(params)
    w = tally.omega
    hits = [(u, v) for u, v in exponent_pairs(5) if s_by_search(u, v, w, 11) == 1]
    assert len(hits) == tally.multiplicity_of_value[1] == 2
    for u, v in hits:
        assert s_map(-u % 5, (v - u) % 5, w, 11) == 1


def test_tally_star_membership():
    params = GaussParams(7, 6)
    tally = build_tally(params)
    r = params.r
    star = {x for x in range(1, r) if pow(r - x, 7, r) == 1}  # -K for odd k
    for x, flag in tally.star_membership.items():
        assert flag == (x in star)


@pytest.mark.parametrize(
    "k, n, a, a_star",
    [
        (6, 3, {1: 3, 2: 4, 3: 2}, {1: 1, 2: 2}),
        (7, 6, {0: 9, 1: 14, 2: 12, 3: 1}, {0: 2, 1: 2, 2: 2}),
        (20, 1166, {0: 1336402, 1: 22995, 2: 153, 3: 6}, {0: 1156, 1: 1, 2: 9}),
        (9, 12, {0: 62, 1: 60, 2: 19, 3: 3}, {0: 6, 1: 4, 2: 2}),
    ],
)
def test_tau_distribution_worked_examples(k, n, a, a_star):
    dist = tau_distribution(GaussParams(k, n))
    assert dist.nonzero() == (a, a_star)
    assert distribution_from_matrix(brute_force_matrix(GaussParams(k, n))) == dist


def test_coset_index_small():
    params = GaussParams(2, 2)
    idx = coset_index_table(params)
    assert idx[1] == idx[4] == 0
    assert idx[2] == idx[3] == 1


@pytest.mark.parametrize("params", valid_params(12, 400), ids=str)
def test_coset_index_partition(params):
    idx = coset_index_table(params)
    counts = Counter(idx[1:])
    assert counts == {j: params.k for j in range(params.n)}
    K = {x for x in range(1, params.r) if pow(x, params.k, params.r) == 1}
    assert all(idx[x] == 0 for x in K)
    # x and y share a coset iff x/y is in K
    r = params.r
    for x in range(1, min(r, 40)):
        for y in range(1, min(r, 40)):
            same = x * pow(y, -1, r) % r in K
            assert (idx[x] == idx[y]) == same


def test_brute_force_small_matrix():
    matrix = brute_force_matrix(GaussParams(2, 2))
    full = {(i, j): matrix.entries.get((i, j), 0) for i in range(2) for j in range(2)}
    assert full == {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    assert full == set_based_matrix(GaussParams(2, 2))
    dist = distribution_from_matrix(matrix)
    assert dist.nonzero() == ({0: 1, 1: 3}, {0: 1, 1: 1})


@pytest.mark.parametrize("params", valid_params(10, 300), ids=str)
def test_brute_force_matches_set_oracle(params):
    matrix = brute_force_matrix(params)
    sets = set_based_matrix(params)
    assert {key: t for key, t in sets.items() if t} == matrix.entries


def test_brute_force_row_sums_and_size():
    for params in SWEEP:
        matrix = brute_force_matrix(params)
        row = star_row(params)
        assert matrix.row_sums() == [params.k - (i == row) for i in range(params.n)]
        assert len(matrix.entries) <= params.r - 2


def test_star_row():
    assert star_row(GaussParams(6, 3)) == 0
    assert star_row(GaussParams(7, 6)) == 3
    # -1 lands in the star row
    for params in SWEEP[:50]:
        assert coset_index_table(params)[params.r - 1] == star_row(params)


def test_oracle_equivalence_sweep():
    for params in SWEEP:
        assert tau_distribution(params) == distribution_from_matrix(brute_force_matrix(params)), params


def test_injectivity_examples():
    assert not is_s_injective(GaussParams(6, 3))
    assert is_s_injective(GaussParams(6, 5))
    for params in SWEEP:
        if params.k == 3:
            assert is_s_injective(params)


def test_injectivity_equals_max_entry_at_most_two():
    for params in SWEEP:
        assert is_s_injective(params) == (brute_force_matrix(params).max_entry() <= 2)


def test_injective_case_closed_values():
    for params in SWEEP:
        if not is_s_injective(params):
            continue
        k = params.k
        dist = tau_distribution(params)
        if k >= 2:
            assert dist.a[2] == (k - 1) * (k - 2) // 2 if k > 2 else True
        assert all(c == 0 for c in dist.a[3:])
        if k >= 3:
            assert dist.a_star[2] == ((k - 2) // 2 if k % 2 == 0 else 0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SWEEP), st.data())
def test_independent_of_omega(params, data):
    k, r = params.k, params.r
    choices = [x for x in range(2, r) if pow(x, k, r) == 1 and multiplicative_order(x, r) == k] or [1]
    w = data.draw(st.sampled_from(choices))
    assert tau_distribution(params, omega=w) == tau_distribution(params)


def test_rejects_wrong_order_omega():
    with pytest.raises(ParameterError):
        tau_distribution(GaussParams(6, 3), omega=2)


def test_distribution_sums_on_sweep():
    for params in SWEEP:
        dist = tau_distribution(params)
        k, n = params.k, params.n
        assert sum(dist.a) == n * n
        assert sum(t * c for t, c in enumerate(dist.a)) == n * k - 1
        assert sum(dist.a_star) == n
        assert sum(t * c for t, c in enumerate(dist.a_star)) == k - 1
        assert all(0 <= s <= a for s, a in zip(dist.a_star, dist.a))
