"""Randomized properties over small multigraphs and uniform sums."""

from hypothesis import given, settings
from hypothesis import strategies as st

from matroidunion.axioms import check_matroid
from matroidunion.core import (
    contract,
    contract_via_base,
    direct_sum,
    dual,
    iter_bits,
    make_graphic,
    make_uniform,
    popcount,
    rank_bruteforce,
    same_family,
    submasks,
)
from matroidunion.descriptors import matroid_from_descriptor
from matroidunion.infinitary import make_Mk, truncation_family
from matroidunion.union import (
    maximal_representation,
    property2_violation,
    reachability,
    union_base,
    union_family_bruteforce,
    union_membership,
)

MAX_EDGES = 6


@st.composite
def graphs(draw, m=None):
    nv = draw(st.integers(1, 4))
    m = draw(st.integers(1, MAX_EDGES)) if m is None else m
    ends = draw(st.lists(st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)), min_size=m, max_size=m))
    return make_graphic([f"v{i}" for i in range(nv)], [[f"e{i}", f"v{u}", f"v{v}"] for i, (u, v) in enumerate(ends)])


@st.composite
def uniform_sums(draw, m=None):
    m = draw(st.integers(1, MAX_EDGES)) if m is None else m
    cuts = sorted(draw(st.sets(st.integers(1, m - 1), max_size=2))) if m > 1 else []
    bounds = [0, *cuts, m]
    parts = []
    for lo, hi in zip(bounds, bounds[1:]):
        k = draw(st.integers(0, hi - lo))
        parts.append(make_uniform(k, [f"e{i}" for i in range(lo, hi)]))
    M = direct_sum(parts)
    return dual(M) if draw(st.booleans()) else M


def matroids(m=None):
    return st.one_of(graphs(m), uniform_sums(m))


@st.composite
def pairs(draw):
    m = draw(st.integers(1, MAX_EDGES))
    return draw(matroids(m)), draw(matroids(m))


@settings(max_examples=60, deadline=None)
@given(pairs())
def test_union_membership_matches_brute_force(pair):
    A, B = pair
    fam = union_family_bruteforce(A, B)
    for X in range(A.full + 1):
        rep = union_membership(A, B, X)
        assert (rep is not None) == (X in fam)
    assert popcount(union_base(A, B).set) == max(popcount(S) for S in fam)


@settings(max_examples=40, deadline=None)
@given(pairs())
def test_property_two_on_maximal_representations(pair):
    A, B = pair
    for X in union_family_bruteforce(A, B):
        R = maximal_representation(A, B, union_membership(A, B, X))
        for x in iter_bits(X):
            S = reachability(A, B, R.I1, R.I2, x)
            assert property2_violation(A, R.I1, S.members) is None


@settings(max_examples=60, deadline=None)
@given(matroids())
def test_rank_facts(M):
    for A in range(M.full + 1):
        assert M.rank(A) == rank_bruteforce(M, A)
        for B in submasks(A):
            assert M.relative_rank(A, B) == M.rank(A) - M.rank(B)


@settings(max_examples=60, deadline=None)
@given(matroids())
def test_dual_and_contraction(M):
    D = dual(M)
    assert {M.full & ~b for b in M.bases()} == set(D.bases())
    assert same_family(dual(D), M)
    for Y in range(0, M.full + 1, 3):
        assert same_family(contract(M, Y), contract_via_base(M, Y))


@settings(max_examples=40, deadline=None)
@given(matroids(), st.integers(0, 3))
def test_Mk_is_truncation(M, k):
    if M.rank() < k:
        return
    Mk = make_Mk(M, k)
    assert set(Mk.independent_sets()) == truncation_family(M, k)
    assert check_matroid(Mk).ok


@settings(max_examples=60, deadline=None)
@given(matroids())
def test_descriptor_round_trip(M):
    again = matroid_from_descriptor(M.descriptor)
    assert same_family(again, M)
    assert same_family(matroid_from_descriptor(dual(M).descriptor), dual(M))
