"""Finite matroids as memoized independence oracles over bitmask subsets.

Every subset of a ground set is an ``int`` whose bit ``i`` stands for the
element at position ``i``.  Element order is the universal tie-breaker, so
greedy routines and searches are reproducible.
"""

from __future__ import annotations

import itertools
import threading
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_by_size(mask: int) -> list[int]:
    return sorted(submasks(mask), key=lambda m: (popcount(m), m))


class GroundSet:
    """An ordered, duplicate-free sequence of string element ids."""

    __slots__ = ("elems", "_index")

    def __init__(self, elems: Iterable[str]):
        elems = tuple(elems)
        index: dict[str, int] = {}
        for pos, e in enumerate(elems):
            if not isinstance(e, str) or not e or any(ch.isspace() for ch in e):
                raise ValueError(f"invalid element id {e!r}")
            if e in index:
                raise ValueError(f"duplicate element id {e!r}")
            index[e] = pos
        self.elems = elems
        self._index = index

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elems)

    def __contains__(self, e: object) -> bool:
        return e in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.elems == other.elems

    def __hash__(self) -> int:
        return hash(self.elems)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.elems)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.elems)) - 1

    def index(self, e: str) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise ValueError(f"element {e!r} not in ground set") from None

    def bit(self, e: str) -> int:
        return 1 << self.index(e)

    def mask(self, elems: Iterable[str]) -> int:
        if isinstance(elems, str):
            raise TypeError("pass an iterable of element ids, not a single string")
        m = 0
        for e in elems:
            m |= 1 << self.index(e)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elems[i] for i in iter_bits(mask))

    def same_elements(self, other: "GroundSet") -> bool:
        return set(self._index) == set(other._index)


class Matroid:
    """Independence oracle over a finite ground set.

    Subclasses implement ``_indep(mask)``.  Results are memoized per
    instance; the oracle must be pure.
    """

    def __init__(self, ground: GroundSet, descriptor: dict):
        self.ground = ground
        self.descriptor = descriptor
        self._memo: dict[int, bool] = {}
        self._lock = threading.Lock()
        self._rank_full: int | None = None

    def _indep(self, mask: int) -> bool:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} |E|={len(self.ground)} {self.descriptor.get('type')}>"

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return self.ground.full

    def mask(self, elems: Iterable[str]) -> int:
        return self.ground.mask(elems)

    def names(self, mask: int) -> tuple[str, ...]:
        return self.ground.names(mask)

    def indep(self, mask: int) -> bool:
        hit = self._memo.get(mask)
        if hit is not None:
            return hit
        if mask & ~self.full:
            raise ValueError("subset not within ground set")
        value = bool(self._indep(mask))
        with self._lock:
            self._memo[mask] = value
        return value

    # -- rank and friends ------------------------------------------------

    def basis_of(self, X: int | None = None, start: int = 0) -> int:
        """Greedy maximal independent subset of ``X`` containing ``start``."""
        X = self.full if X is None else X
        J = start
        for i in iter_bits(X & ~start):
            if self.indep(J | (1 << i)):
                J |= 1 << i
        return J

    def rank(self, X: int | None = None) -> int:
        if X is None:
            if self._rank_full is None:
                self._rank_full = popcount(self.basis_of(self.full))
            return self._rank_full
        return popcount(self.basis_of(X))

    def relative_rank(self, A: int, B: int) -> int:
        """``r(A|B)``: grow a maximal independent ``J`` in ``B`` to a maximal ``I`` in ``A``."""
        if B & ~A:
            raise ValueError("relative rank needs B to be a subset of A")
        J = self.basis_of(B)
        I = self.basis_of(A, start=J)
        return popcount(I & ~J)

    def fundamental_circuit(self, I: int, y: int) -> int | None:
        """Unique circuit inside ``I + y`` (``y`` a position), or ``None``."""
        if not self.indep(I):
            raise ValueError("fundamental circuit needs an independent set")
        yb = 1 << y
        if I & yb or self.indep(I | yb):
            return None
        return self._fundamental_circuit(I, y)

    def _fundamental_circuit(self, I: int, y: int) -> int:
        Iy = I | (1 << y)
        C = 1 << y
        for e in iter_bits(I):
            if self.indep(Iy & ~(1 << e)):
                C |= 1 << e
        return C

    # -- exhaustive enumeration (desk scale) ------------------------------

    def independent_sets(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.indep(m)]

    def bases(self) -> list[int]:
        r = self.rank()
        return [m for m in range(1 << self.n) if popcount(m) == r and self.indep(m)]

    def circuits(self) -> list[int]:
        out = []
        for m in masks_by_size(self.full):
            if m and not self.indep(m) and all(self.indep(m & ~(1 << e)) for e in iter_bits(m)):
                out.append(m)
        return out

    def is_circuit(self, C: int) -> bool:
        return bool(C) and not self.indep(C) and all(self.indep(C & ~(1 << e)) for e in iter_bits(C))

    def loops(self) -> int:
        return sum(1 << i for i in range(self.n) if not self.indep(1 << i))


def rank_bruteforce(M: Matroid, X: int) -> int:
    return max(popcount(s) for s in submasks(X) if M.indep(s))


def relative_rank_bruteforce(M: Matroid, A: int, B: int) -> int:
    """Literal max formula over every maximal ``J`` in ``B`` and every ``I`` in ``A``."""
    indep_B = [s for s in submasks(B) if M.indep(s)]
    maximal_B = [J for J in indep_B if not any(J != K and J & K == J for K in indep_B)]
    best = 0
    for J in maximal_B:
        for I in submasks(A):
            if I & J == J and M.indep(I):
                best = max(best, popcount(I & ~J))
    return best


# -- concrete matroids ----------------------------------------------------


class BlockMatroid(Matroid):
    """Direct sum of uniform matroids: ``X`` is independent iff
    ``|X & block| <= k`` for every ``(block, k)``.

    Covers uniform, free, loop and circuit matroids and their sums, duals
    and minors in closed form.
    """

    def __init__(self, ground: GroundSet, blocks: Sequence[tuple[int, int]], descriptor: dict):
        super().__init__(ground, descriptor)
        covered = 0
        for bm, k in blocks:
            if bm & covered:
                raise ValueError("blocks overlap")
            if k < 0:
                raise ValueError("negative block rank")
            covered |= bm
        if covered != ground.full:
            raise ValueError("blocks must cover the ground set")
        self.blocks = tuple((bm, min(k, popcount(bm))) for bm, k in blocks if bm)
        self._where = {}
        for idx, (bm, _) in enumerate(self.blocks):
            for i in iter_bits(bm):
                self._where[i] = idx

    def _indep(self, mask: int) -> bool:
        for bm, k in self.blocks:
            if popcount(mask & bm) > k:
                return False
        return True

    def rank(self, X: int | None = None) -> int:
        X = self.full if X is None else X
        return sum(min(k, popcount(X & bm)) for bm, k in self.blocks)

    def _fundamental_circuit(self, I: int, y: int) -> int:
        bm, _ = self.blocks[self._where[y]]
        return (I | (1 << y)) & bm

    def canonical_form(self) -> tuple[frozenset, frozenset, frozenset]:
        """(connected blocks as (names, k), loops, coloops); equal iff same matroid."""
        comps, loops, coloops = set(), set(), set()
        for bm, k in self.blocks:
            names = self.ground.names(bm)
            if k == 0:
                loops.update(names)
            elif k == popcount(bm):
                coloops.update(names)
            else:
                comps.add((frozenset(names), k))
        return frozenset(comps), frozenset(loops), frozenset(coloops)


def _ground(ground: GroundSet | Iterable[str]) -> GroundSet:
    return ground if isinstance(ground, GroundSet) else GroundSet(ground)


def make_uniform(k: int, ground: GroundSet | Iterable[str]) -> BlockMatroid:
    if k < 0:
        raise ValueError("k must be nonnegative")
    g = _ground(ground)
    return BlockMatroid(g, [(g.full, k)], {"type": "uniform", "k": k, "ground": list(g)})


def make_free(ground: GroundSet | Iterable[str]) -> BlockMatroid:
    g = _ground(ground)
    return BlockMatroid(g, [(g.full, len(g))], {"type": "free", "ground": list(g)})


def make_loops(ground: GroundSet | Iterable[str]) -> BlockMatroid:
    g = _ground(ground)
    return BlockMatroid(g, [(g.full, 0)], {"type": "loops", "ground": list(g)})


def make_circuit_matroid(ground: GroundSet | Iterable[str]) -> BlockMatroid:
    g = _ground(ground)
    if len(g) == 0:
        raise ValueError("circuit matroid needs a nonempty ground set")
    return BlockMatroid(g, [(g.full, len(g) - 1)], {"type": "circuit", "ground": list(g)})


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; independent sets are forests."""

    def __init__(self, vertices: Sequence[str], edges: Sequence[tuple[str, str, str]]):
        vertices = [str(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex")
        vindex = {v: i for i, v in enumerate(vertices)}
        ends = []
        for eid, u, v in edges:
            if u not in vindex or v not in vindex:
                bad = u if u not in vindex else v
                raise ValueError(f"edge {eid!r} has unknown endpoint {bad!r}")
            ends.append((vindex[u], vindex[v]))
        ground = GroundSet(e[0] for e in edges)
        super().__init__(ground, {
            "type": "graphic",
            "vertices": list(vertices),
            "edges": [[e, u, v] for e, u, v in edges],
        })
        self.vertices = tuple(vertices)
        self.ends = tuple(ends)

    def _indep(self, mask: int) -> bool:
        parent = list(range(len(self.vertices)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in iter_bits(mask):
            u, v = self.ends[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return self.rank() == len(self.vertices) - 1


def make_graphic(vertices: Sequence[str], edges: Sequence[Sequence[str]]) -> GraphicMatroid:
    return GraphicMatroid(vertices, [tuple(e) for e in edges])


class _Gather:
    """Maps masks of a child ground set to masks of a parent ground set."""

    __slots__ = ("bits",)

    def __init__(self, child: GroundSet, parent: GroundSet):
        self.bits = tuple(1 << parent.index(e) for e in child)

    def up(self, mask: int) -> int:
        out = 0
        bits = self.bits
        for i in iter_bits(mask):
            out |= bits[i]
        return out


class DualMatroid(Matroid):
    def __init__(self, M: Matroid):
        super().__init__(M.ground, {"type": "dual", "of": M.descriptor})
        self.inner = M

    def _indep(self, mask: int) -> bool:
        M = self.inner
        return M.rank(M.full & ~mask) == M.rank()


class RestrictedMatroid(Matroid):
    def __init__(self, M: Matroid, X: int):
        ground = GroundSet(M.ground.names(X))
        super().__init__(ground, {"type": "restrict", "of": M.descriptor, "set": list(ground)})
        self.inner = M
        self._up = _Gather(ground, M.ground)

    def _indep(self, mask: int) -> bool:
        return self.inner.indep(self._up.up(mask))


class ReorderedMatroid(Matroid):
    """Same matroid presented over a permuted ground set."""

    def __init__(self, M: Matroid, ground: GroundSet):
        if not ground.same_elements(M.ground) or len(ground) != len(M.ground):
            raise ValueError("reordering needs the same elements")
        super().__init__(ground, M.descriptor)
        self.inner = M
        self._up = _Gather(ground, M.ground)

    def _indep(self, mask: int) -> bool:
        return self.inner.indep(self._up.up(mask))


class DirectSum(Matroid):
    def __init__(self, parts: Sequence[Matroid], ground: GroundSet):
        super().__init__(ground, {"type": "sum", "parts": [p.descriptor for p in parts]})
        self.parts = tuple(parts)
        self._maps = []
        self._part_of: dict[int, int] = {}
        for idx, p in enumerate(parts):
            g = _Gather(p.ground, ground)
            self._maps.append(g)
            for b in g.bits:
                self._part_of[b.bit_length() - 1] = idx
        self._down = [{b: 1 << j for j, b in enumerate(g.bits)} for g in self._maps]

    def _project(self, idx: int, mask: int) -> int:
        out = 0
        for b, cb in self._down[idx].items():
            if mask & b:
                out |= cb
        return out

    def _indep(self, mask: int) -> bool:
        return all(p.indep(self._project(i, mask)) for i, p in enumerate(self.parts))

    def _fundamental_circuit(self, I: int, y: int) -> int:
        idx = self._part_of[y]
        p = self.parts[idx]
        local_y = self._down[idx][1 << y].bit_length() - 1
        C = p.fundamental_circuit(self._project(idx, I), local_y)
        return self._maps[idx].up(C)


def reorder(M: Matroid, ground: GroundSet) -> Matroid:
    if M.ground == ground:
        return M
    if isinstance(M, BlockMatroid):
        up = _Gather(M.ground, ground)
        return BlockMatroid(ground, [(up.up(bm), k) for bm, k in M.blocks], M.descriptor)
    return ReorderedMatroid(M, ground)


def dual(M: Matroid) -> Matroid:
    desc = {"type": "dual", "of": M.descriptor}
    if isinstance(M, BlockMatroid):
        return BlockMatroid(M.ground, [(bm, popcount(bm) - k) for bm, k in M.blocks], desc)
    return DualMatroid(M)


def direct_sum(parts: Sequence[Matroid], ground: GroundSet | None = None) -> Matroid:
    """Direct sum over disjoint ground sets.

    ``ground`` may give any ordering of the combined elements; it defaults to
    the concatenation of the parts' ground sets.
    """
    names: list[str] = []
    seen: set[str] = set()
    for p in parts:
        for e in p.ground:
            if e in seen:
                raise ValueError(f"overlapping ground sets at element {e!r}")
            seen.add(e)
            names.append(e)
    if ground is None:
        ground = GroundSet(names)
    elif set(ground) != seen or len(ground) != len(names):
        raise ValueError("ground ordering must list exactly the summands' elements")
    desc = {"type": "sum", "parts": [p.descriptor for p in parts]}
    if all(isinstance(p, BlockMatroid) for p in parts):
        blocks = []
        for p in parts:
            up = _Gather(p.ground, ground)
            blocks.extend((up.up(bm), k) for bm, k in p.blocks)
        return BlockMatroid(ground, blocks, desc)
    return DirectSum(parts, ground)


def restrict(M: Matroid, X: int) -> Matroid:
    if X & ~M.full:
        raise ValueError("subset not within ground set")
    if isinstance(M, BlockMatroid):
        g = GroundSet(M.ground.names(X))
        blocks = []
        for bm, k in M.blocks:
            part = bm & X
            if part:
                blocks.append((_map_between(part, M.ground, g), k))
        return BlockMatroid(g, blocks, {"type": "restrict", "of": M.descriptor, "set": list(g)})
    return RestrictedMatroid(M, X)


def _map_between(mask: int, src: GroundSet, dst: GroundSet) -> int:
    return dst.mask(src.names(mask))


def contract(M: Matroid, Y: int) -> Matroid:
    """Contraction onto ``Y``: ``M.Y = (M* | Y)*``."""
    if Y & ~M.full:
        raise ValueError("subset not within ground set")
    result = dual(restrict(dual(M), Y))
    result.descriptor = {"type": "contract", "of": M.descriptor, "set": list(M.ground.names(Y))}
    return result


class _BaseExtensionContraction(Matroid):
    def __init__(self, M: Matroid, Y: int):
        ground = GroundSet(M.ground.names(Y))
        super().__init__(ground, {"type": "contract", "of": M.descriptor, "set": list(ground)})
        self.inner = M
        self._up = _Gather(ground, M.ground)
        self._base = M.basis_of(M.full & ~Y)

    def _indep(self, mask: int) -> bool:
        return self.inner.indep(self._up.up(mask) | self._base)


def contract_via_base(M: Matroid, Y: int) -> Matroid:
    """Contraction by the base-extension definition (cross-check for ``contract``)."""
    if Y & ~M.full:
        raise ValueError("subset not within ground set")
    return _BaseExtensionContraction(M, Y)


class ParallelExtension(Matroid):
    """Each element ``e`` replaced by ``copies`` parallel copies ``e#1..e#c``."""

    def __init__(self, M: Matroid, copies: int):
        names = [f"{e}#{j}" for e in M.ground for j in range(1, copies + 1)]
        super().__init__(GroundSet(names), {"type": "parallel", "of": M.descriptor, "copies": copies})
        self.inner = M
        self.copies = copies

    def _indep(self, mask: int) -> bool:
        c = self.copies
        proj = 0
        for i in iter_bits(mask):
            b = 1 << (i // c)
            if proj & b:
                return False
            proj |= b
        return self.inner.indep(proj)


def same_family(M: Matroid, N: Matroid) -> bool:
    """Independence-family equality, matching elements by id."""
    if not M.ground.same_elements(N.ground) or M.n != N.n:
        return False
    if isinstance(M, BlockMatroid) and isinstance(N, BlockMatroid):
        return M.canonical_form() == N.canonical_form()
    N = reorder(N, M.ground)
    return all(M.indep(m) == N.indep(m) for m in range(1 << M.n))


def combinations_of(mask: int, k: int) -> Iterator[int]:
    for combo in itertools.combinations(list(iter_bits(mask)), k):
        out = 0
        for i in combo:
            out |= 1 << i
        yield out
