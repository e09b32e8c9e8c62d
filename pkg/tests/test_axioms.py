import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidunion.axioms import (
    FAIL,
    PASS,
    PRECONDITION,
    SAMPLED,
    SetSystem,
    check_circuit_elimination,
    check_I1,
    check_I2,
    check_I3,
    check_I3prime,
    check_IM,
    check_matroid,
    is_matroid,
)
from matroidunion.catalog import all_catalog, catalog_pairs
from matroidunion.core import (
    GroundSet,
    contract,
    direct_sum,
    dual,
    iter_bits,
    make_circuit_matroid,
    make_free,
    make_graphic,
    make_uniform,
    popcount,
    restrict,
)
from matroidunion.infinitary import claim32_window
from matroidunion.union import union_family_bruteforce


def system(ground, *members):
    return SetSystem.of(list(ground), [list(m) for m in members])


def test_missing_subset_fails_I2():
    S = system("ab", "", "a", "ab")
    v = check_I2(S)
    assert v.status == FAIL
    assert S.ground.names(v.witness["missing"]) == ("b",)
    assert v.witness["missing"] not in S.members


def test_uniform_passes_I1_I2():
    S = SetSystem.from_matroid(make_uniform(2, "abc"))
    assert check_I1(S).status == PASS and check_I2(S).status == PASS


def test_empty_family_fails_I1():
    assert check_I1(SetSystem.of("ab", [])).status == FAIL


def test_I3_crafted_failure():
    S = system("abc", "", "a", "b", "ab", "c")
    v = check_I3(S)
    assert v.status == FAIL
    I, Ip = v.witness["I"], v.witness["maximal"]
    # re-evaluate: I is not maximal, I' is maximal, nothing of I' - I extends I
    assert any((I | 1 << e) in S.members for e in range(3) if not I >> e & 1)
    assert not any((Ip | 1 << e) in S.members for e in range(3) if not Ip >> e & 1)
    assert not any((I | 1 << x) in S.members for x in iter_bits(Ip & ~I))


def test_I3_vacuous_on_empty_set_only():
    assert check_I3(system("a", "")).status == PASS


def test_I3_reports_precondition():
    assert check_I3(system("ab", "", "ab")).status == PRECONDITION


def test_I3prime_examples():
    assert check_I3prime(SetSystem.from_matroid(make_uniform(1, "ab"))).status == PASS
    S = system("abc", "", "a", "b", "ac")
    v = check_I3prime(S)
    assert v.status == FAIL
    B, I, x = v.witness["B"], v.witness["I"], v.witness["x"]
    assert x & I and not x & B
    assert not any(((I | 1 << y) & ~x) in S.members for y in iter_bits(B & ~I))


def test_IM_on_finite_systems():
    assert check_IM(SetSystem.from_matroid(make_uniform(2, "abcd"))).status == PASS
    assert check_IM(system("abc", "", "a", "b", "ab", "c")).status == PASS


def test_IM_on_claim32_window_union():
    M, N = claim32_window(2).matroids
    S = SetSystem(M.ground, frozenset(union_family_bruteforce(M, N)))
    assert check_IM(S).status == PASS
    assert is_matroid(S).ok


def test_circuit_elimination_examples():
    for M in (make_uniform(1, "abc"), make_graphic("uvw", [["e1", "u", "v"], ["e2", "v", "w"], ["e3", "u", "w"]]),
              make_free("ab")):
        assert check_circuit_elimination(M.circuits(), max_x=None).status == PASS


def test_circuit_elimination_failure_witness():
    g = GroundSet("abc")
    circuits = [g.mask(list("ab")), g.mask(list("bc"))]
    v = check_circuit_elimination(circuits)
    assert v.status == FAIL
    C, X, U, z = (v.witness[k] for k in ("C", "X", "union_Cx", "z"))
    T = (C | U) & ~X
    assert not any(D >> z & 1 and D & ~T == 0 for D in circuits)


def test_is_matroid_examples():
    ladder = make_graphic(["u1", "u2", "v1", "v2"],
                          [["r1", "u1", "v1"], ["r2", "u2", "v2"], ["t", "u1", "u2"], ["s", "v1", "v2"]])
    assert is_matroid(SetSystem.from_matroid(ladder)).ok
    rep = is_matroid(system("ab", "", "a", "ab"))
    assert rep.first_failure[0] == "I2"
    assert rep.to_json()["witness"]["axiom"] == "I2"
    g = [f"e{i}" for i in range(6)]
    fam = union_family_bruteforce(make_uniform(2, g), make_uniform(1, g))
    assert is_matroid(SetSystem.of(g, fam)).ok


def test_report_json_shape():
    rep = check_matroid(make_uniform(2, "abc"))
    assert rep.to_json() == {"I1": "pass", "I2": "pass", "I3": "pass", "I3'": "pass", "IM": "pass", "C": "pass",
                             "witness": None}


@pytest.mark.parametrize("n", range(0, 9))
def test_catalog_closed_under_constructors(n):
    for _, name, M in all_catalog(n, n):
        half = M.full & ((1 << (n // 2)) - 1)
        odd = sum(1 << i for i in range(1, n, 2))
        for variant in (M, dual(M), restrict(M, half), restrict(M, odd), contract(M, half), contract(M, odd)):
            assert check_matroid(variant).ok, (name, variant.descriptor)
    if n >= 2:
        items = all_catalog(n // 2, n // 2)
        for _, name, M in items:
            renamed = make_circuit_matroid([f"z{i}" for i in range(max(1, n - n // 2))])
            assert check_matroid(direct_sum([M, renamed])).ok, name


@pytest.mark.parametrize("size", [9, 10])
def test_larger_constructed_matroids(size):
    g = [f"e{i}" for i in range(size)]
    wheelish = make_graphic([f"v{i}" for i in range(5)],
                            [[g[i], f"v{i % 5}", f"v{(i * 2 + 1) % 5}"] for i in range(size)])
    for M in (make_uniform(3, g), wheelish, direct_sum([make_uniform(2, g[:4]), make_circuit_matroid(g[4:])])):
        assert check_matroid(M, include_IM=False).ok


def test_union_families_are_matroids_small():
    for n, name, A, B in catalog_pairs(5):
        fam = union_family_bruteforce(A, B)
        assert is_matroid(SetSystem(A.ground, frozenset(fam))).ok, name


def test_sampling_beyond_cap_is_seeded():
    g = [f"e{i}" for i in range(16)]
    M = direct_sum([make_uniform(3, g[:8]), make_circuit_matroid(g[8:])])
    a, b = check_matroid(M, seed=7), check_matroid(M, seed=7)
    assert a.sampled and a.to_json() == b.to_json()
    assert all(v.status == SAMPLED for v in a.verdicts.values())
    assert a.to_json()["seed"] == 7


@settings(max_examples=150, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=15), max_size=10))
def test_fail_witnesses_reevaluate(members):
    S = SetSystem.of([f"x{i}" for i in range(4)], members)
    rep = is_matroid(S)
    v = rep.verdicts
    if v["I1"].status == FAIL:
        assert 0 not in S.members
    if v["I2"].status == FAIL:
        w = v["I2"].witness
        assert w["member"] in S.members and w["missing"] not in S.members and w["missing"] & ~w["member"] == 0
    if v["I3'"].status == FAIL:
        w = v["I3'"].witness
        assert not any(((w["I"] | 1 << y) & ~w["x"]) in S.members for y in iter_bits(w["B"] & ~w["I"]))
    if v["I3"].status == FAIL:
        w = v["I3"].witness
        assert not any((w["I"] | 1 << x) in S.members for x in iter_bits(w["maximal"] & ~w["I"]))
    if v["C"].status == FAIL:
        w = v["C"].witness
        circuits = S.circuits()
        T = (w["C"] | w["union_Cx"]) & ~w["X"]
        assert not any(D >> w["z"] & 1 and D & ~T == 0 for D in circuits)
    if rep.ok:
        sizes = {popcount(m) for m in S.maximal()}
        assert len(sizes) <= 1
