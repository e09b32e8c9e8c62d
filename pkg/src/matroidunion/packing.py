"""Disjoint bases, covers by independent sets, and the spanning-tree special case.

Each question is answered twice: by a rank condition swept over all
subsets, and constructively through a k-fold self-union.  Brute-force
versions live at the bottom for the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    GraphicMatroid,
    Matroid,
    ParallelExtension,
    contract,
    dual,
    iter_bits,
    make_graphic,
    masks_by_size,
    popcount,
    restrict,
)
from .union import k_fold_base, k_fold_union, k_fold_matroid


def g_c(sets: Sequence[int], c: int) -> int:
    """Elements lying in at least ``c`` of ``sets``."""
    if not 1 <= c <= max(len(sets), 1):
        raise ValueError("need 1 <= c <= k")
    out = 0
    everything = 0
    for s in sets:
        everything |= s
    for e in iter_bits(everything):
        if sum(1 for s in sets if s >> e & 1) >= c:
            out |= 1 << e
    return out


def in_I_Nkc(N: Matroid, k: int, c: int, X: int) -> list[int] | None:
    """``k`` independent sets of ``N`` whose ``g_c`` is exactly ``X``, or ``None``.

    Anything outside ``X`` can be dropped, so the question is whether ``c``
    parallel copies of ``N|X`` split into ``k`` independent pieces.
    """
    if not 1 <= c <= k:
        raise ValueError("need 1 <= c <= k")
    if X == 0:
        return [0] * k
    NX = restrict(N, X)
    P = ParallelExtension(NX, c)
    pieces = k_fold_union([P] * k, P.full)
    if pieces is None:
        return None
    back = [e for e in iter_bits(X)]
    out = []
    for p in pieces:
        s = 0
        for i in iter_bits(p):
            s |= 1 << back[i // c]
        out.append(s)
    assert g_c(out, c) == X and all(N.indep(s) for s in out)
    return out


def I_Nkc_family_bruteforce(N: Matroid, k: int, c: int) -> set[int]:
    ind = N.independent_sets()
    return {g_c(t, c) for t in itertools.combinations_with_replacement(ind, k)}


# -- packing ----------------------------------------------------------------


@dataclass
class PackingReport:
    k: int
    packable: bool
    bases: list[int] = field(default_factory=list)
    violating_Y: int | None = None
    constructed: bool = False

    @property
    def consistent(self) -> bool:
        return self.packable == self.constructed

    def to_json(self, M: Matroid) -> dict:
        names = M.ground.names
        out: dict = {"k": self.k, "verdict": "packable" if self.packable else "not-packable"}
        if self.packable:
            out["bases"] = [sorted(names(b)) for b in self.bases]
        else:
            Y = self.violating_Y or 0
            out["violating_Y"] = sorted(names(Y))
            out["size_Y"] = popcount(Y)
            out["k_times_relative_rank"] = self.k * M.relative_rank(M.full, M.full & ~Y)
        return out


def packing_violation(M: Matroid, k: int, max_y: int | None = None) -> int | None:
    """Smallest ``Y`` (size, then position) with ``|Y| < k * r(E | E - Y)``."""
    E = M.full
    for Y in masks_by_size(E):
        if max_y is not None and popcount(Y) > max_y:
            break
        if popcount(Y) < k * M.relative_rank(E, E & ~Y):
            return Y
    return None


def pack_bases(M: Matroid, k: int, max_y: int | None = None) -> PackingReport:
    if k < 1:
        raise ValueError("k must be positive")
    Y = packing_violation(M, k, max_y)
    r = M.rank()
    pieces = k_fold_base([M] * k)
    constructed = sum(popcount(p) for p in pieces) == k * r
    rep = PackingReport(k, Y is None, pieces if constructed else [], Y, constructed)
    if rep.packable and not constructed:
        raise AssertionError("rank condition holds but the self-union found no packing")
    return rep


def dual_packing_criterion(M: Matroid, k: int) -> bool:
    """``k`` disjoint bases iff every set is a ``g_{k-1}`` of ``k`` coindependent sets (``k >= 2``)."""
    if k < 2:
        raise ValueError("the dual criterion needs k >= 2")
    D = dual(M)
    return all(in_I_Nkc(D, k, k - 1, X) is not None for X in range(M.full + 1))


def minor_rank_identity_check(M: Matroid, Y: int, Z: int) -> tuple[int, int]:
    """Both sides of ``r(E | E - Z) = r_{M.Y}(Y | Y - Z)``."""
    if Z & ~Y or Y & ~M.full:
        raise ValueError("need Z within Y within E")
    lhs = M.relative_rank(M.full, M.full & ~Z)
    MY = contract(M, Y)
    y_names = M.ground.names(Y)
    rhs = MY.relative_rank(MY.ground.mask(y_names), MY.ground.mask(M.ground.names(Y & ~Z)))
    return lhs, rhs


# -- covering ---------------------------------------------------------------


@dataclass
class CoveringReport:
    k: int
    coverable: bool
    cover: list[int] = field(default_factory=list)
    violating_X: int | None = None
    rank_condition: bool = True

    @property
    def consistent(self) -> bool:
        return self.coverable == self.rank_condition

    def to_json(self, M: Matroid) -> dict:
        names = M.ground.names
        out: dict = {"k": self.k, "verdict": "coverable" if self.coverable else "not-coverable"}
        if self.coverable:
            out["cover"] = [sorted(names(s)) for s in self.cover]
        else:
            X = self.violating_X or 0
            out["violating_X"] = sorted(names(X))
            out["rank_X"] = M.rank(X)
            out["size_X"] = popcount(X)
        return out


def covering_violation(M: Matroid, k: int, within: int | None = None) -> int | None:
    for X in masks_by_size(M.full if within is None else within):
        if k * M.rank(X) < popcount(X):
            return X
    return None


def cover_independent(M: Matroid, k: int) -> CoveringReport:
    if k < 1:
        raise ValueError("k must be positive")
    rank_ok = covering_violation(M, k) is None
    pieces = k_fold_union([M] * k, M.full)
    if pieces is not None:
        return CoveringReport(k, True, pieces, None, rank_ok)
    # shrink E to a circuit of the k-fold union; a violating set sits inside it
    U = k_fold_matroid([M] * k)
    C = M.full
    for e in iter_bits(M.full):
        if not U.indep(C & ~(1 << e)):
            C &= ~(1 << e)
    X = covering_violation(M, k, within=C)
    if X is None:
        raise AssertionError("union circuit without a rank violation")
    return CoveringReport(k, False, [], X, rank_ok)


# -- graphs -----------------------------------------------------------------


def _graphic(vertices: Sequence[str], edges: Sequence[Sequence[str]]) -> GraphicMatroid:
    return make_graphic(vertices, edges)


def tree_pack(vertices: Sequence[str], edges: Sequence[Sequence[str]], k: int) -> PackingReport:
    G = _graphic(vertices, edges)
    if not G.is_connected():
        raise ValueError("graph is disconnected, so it has no spanning tree")
    return pack_bases(G, k)


def forest_cover(vertices: Sequence[str], edges: Sequence[Sequence[str]], k: int) -> CoveringReport:
    return cover_independent(_graphic(vertices, edges), k)


# -- brute force --------------------------------------------------------------


def disjoint_bases_bruteforce(M: Matroid, k: int) -> list[int] | None:
    bases = M.bases()

    def search(start: int, used: int, chosen: list[int]) -> list[int] | None:
        if len(chosen) == k:
            return chosen
        for i in range(start, len(bases)):
            if bases[i] & used == 0:
                found = search(i + (1 if bases[i] else 0), used | bases[i], chosen + [bases[i]])
                if found is not None:
                    return found
        return None

    return search(0, 0, [])


def cover_bruteforce(M: Matroid, k: int) -> list[int] | None:
    """Try every colouring of the elements with ``k`` colours."""
    n = M.n
    for colours in itertools.product(range(k), repeat=n):
        parts = [0] * k
        for i, c in enumerate(colours):
            parts[c] |= 1 << i
        if all(M.indep(p) for p in parts):
            return parts
    return None


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def spanning_tree_packing_number(G: GraphicMatroid) -> int:
    """Partition formula: min over vertex partitions ``P`` of ``floor(crossing(P) / (|P| - 1))``."""
    best = None
    for part in _set_partitions(list(range(len(G.vertices)))):
        if len(part) < 2:
            continue
        block = {v: i for i, p in enumerate(part) for v in p}
        crossing = sum(1 for u, v in G.ends if block[u] != block[v])
        value = crossing // (len(part) - 1)
        best = value if best is None else min(best, value)
    if best is None:  # one vertex: any number of empty trees
        return 10 ** 9
    return best
