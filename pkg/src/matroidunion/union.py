"""Matroid union via exchange chains.

A set ``X`` lies in the union system of ``M1`` and ``M2`` when ``X = I1 | I2``
with ``I1`` independent in ``M1`` and ``I2`` independent in ``M2``.  Membership
is decided by augmenting a representation one element at a time; each
augmentation walks a shortest exchange chain and applies it as a sequence of
single-element swaps.

Chains alternate between the two matroids.  An *even* chain ``(y0, ..., yn)``
links ``y_i -> y_{i+1}`` through a circuit of ``M1`` inside ``I1 + y_i`` for
even ``i`` and through a circuit of ``M2`` inside ``I2 + y_i`` for odd ``i``;
an *odd* chain starts in ``M2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .core import GroundSet, Matroid, iter_bits, reorder

EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class Representation:
    I1: int
    I2: int

    @property
    def set(self) -> int:
        return self.I1 | self.I2

    def normalized(self) -> "Representation":
        return Representation(self.I1, self.I2 & ~self.I1)

    def to_json(self, ground: GroundSet) -> dict:
        return {"I1": sorted(ground.names(self.I1)), "I2": sorted(ground.names(self.I2))}


@dataclass(frozen=True)
class ExchangeChain:
    parity: str
    nodes: tuple[int, ...]
    certs: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def subchain(self, k: int, l: int) -> "ExchangeChain":
        parity = self.parity if k % 2 == 0 else (ODD if self.parity == EVEN else EVEN)
        return ExchangeChain(parity, self.nodes[k:l + 1], self.certs[k:l])

    def to_json(self, ground: GroundSet) -> dict:
        return {
            "parity": self.parity,
            "nodes": [ground.elems[i] for i in self.nodes],
            "certs": [sorted(ground.names(c)) for c in self.certs],
        }


@dataclass
class ReachabilitySet:
    rep: Representation
    x: int
    members: int
    chains: dict[int, ExchangeChain] = field(default_factory=dict)

    def to_json(self, ground: GroundSet) -> dict:
        return {
            "I1": sorted(ground.names(self.rep.I1)),
            "I2": sorted(ground.names(self.rep.I2)),
            "x": ground.elems[self.x],
            "members": sorted(ground.names(self.members)),
            "chains": {ground.elems[a]: ch.to_json(ground) for a, ch in sorted(self.chains.items())},
        }


def align(M1: Matroid, M2: Matroid) -> tuple[Matroid, Matroid]:
    """Present ``M2`` over ``M1``'s ground order; grounds must hold the same ids."""
    if M1.ground == M2.ground:
        return M1, M2
    if not M1.ground.same_elements(M2.ground) or M1.n != M2.n:
        raise ValueError("ground mismatch: union needs a shared ground set")
    return M1, reorder(M2, M1.ground)


def _flip(parity: str) -> str:
    return ODD if parity == EVEN else EVEN


def _link_matroids(parity: str, n: int) -> list[str]:
    """Which matroid certifies each link of a chain with ``n`` links."""
    out, p = [], parity
    for _ in range(n):
        out.append(p)
        p = _flip(p)
    return out


def check_representation(M1: Matroid, M2: Matroid, rep: Representation) -> None:
    if not M1.indep(rep.I1):
        raise ValueError("I1 is not independent in M1")
    if not M2.indep(rep.I2):
        raise ValueError("I2 is not independent in M2")


def validate_chain(ch: ExchangeChain, M1: Matroid, M2: Matroid, I1: int, I2: int) -> tuple[bool, str]:
    """Re-derive every link certificate; returns ``(ok, reason)``."""
    M1, M2 = align(M1, M2)
    if not ch.nodes:
        return False, "empty chain"
    if ch.parity not in (EVEN, ODD):
        return False, f"unknown parity {ch.parity!r}"
    x = ch.nodes[-1]
    if not (I1 | I2) >> x & 1:
        return False, "last element is not in I1 | I2"
    n = ch.length
    if len(ch.certs) != n:
        return False, f"expected {n} certificates, got {len(ch.certs)}"
    sides = _link_matroids(ch.parity, n)
    for i in range(n):
        M, I, I_other = (M1, I1, I2) if sides[i] == EVEN else (M2, I2, I1)
        y, z, C = ch.nodes[i], ch.nodes[i + 1], ch.certs[i]
        if y == z:
            return False, f"link {i}: repeated element"
        if not (C >> y & 1 and C >> z & 1):
            return False, f"link {i}: certificate misses y_{i} or y_{i + 1}"
        if C & ~(I | (1 << y)):
            return False, f"link {i}: certificate not inside I + y_{i}"
        if not M.is_circuit(C):
            return False, f"link {i}: certificate is not a circuit"
        # alternation: inner nodes sit in exactly one side
        if i + 1 < n and not (I >> z & 1 and not I_other >> z & 1):
            return False, f"link {i}: y_{i + 1} does not alternate sides"
    return True, "ok"


def apply_chain(ch: ExchangeChain, M1: Matroid, M2: Matroid, I1: int, I2: int) -> Representation:
    """Swap along a shortest chain from ``y`` to ``x``.

    The result represents ``(I + y) - x``, or ``I + y`` when ``x`` lies in
    both ``I1`` and ``I2``.
    """
    M1, M2 = align(M1, M2)
    ok, why = validate_chain(ch, M1, M2, I1, I2)
    if not ok:
        raise ValueError(f"invalid chain: {why}")
    cur = [I1, I2]
    side = 0 if ch.parity == EVEN else 1
    for i in range(ch.length):
        y, z = ch.nodes[i], ch.nodes[i + 1]
        cur[side] = (cur[side] | (1 << y)) & ~(1 << z)
        side ^= 1
    rep = Representation(cur[0], cur[1])
    if not (M1.indep(rep.I1) and M2.indep(rep.I2)):
        raise ValueError("chain is not a shortest chain; swaps broke independence")
    return rep


class _Circuits:
    """Lazy fundamental circuits of ``I + a`` for one matroid."""

    def __init__(self, M: Matroid, I: int):
        self.M, self.I = M, I
        self._cache: dict[int, int | None] = {}

    def __call__(self, a: int) -> int | None:
        if a not in self._cache:
            self._cache[a] = self.M.fundamental_circuit(self.I, a)
        return self._cache[a]


def _chain_from_path(path: list[tuple[int, str]], C1: _Circuits, C2: _Circuits) -> ExchangeChain:
    nodes = tuple(a for a, _ in path)
    if len(nodes) == 1:
        return ExchangeChain(EVEN, nodes, ())
    parity = path[0][1]
    certs = []
    for (a, p) in path[:-1]:
        certs.append((C1 if p == EVEN else C2)(a))
    return ExchangeChain(parity, nodes, tuple(certs))


def reachability(M1: Matroid, M2: Matroid, I1: int, I2: int, x: int) -> ReachabilitySet:
    """All ``a`` with an ``(I1, I2, a, x)``-chain, each with a shortest witness.

    Breadth-first search backwards from ``x``; ties go to lower positions.
    """
    M1, M2 = align(M1, M2)
    check_representation(M1, M2, Representation(I1, I2))
    if not (I1 | I2) >> x & 1:
        raise ValueError("x must lie in I1 | I2")
    C1, C2 = _Circuits(M1, I1), _Circuits(M2, I2)
    # pred[side][b]: elements a whose circuit in I_side + a contains b
    pred: tuple[dict[int, list[int]], dict[int, list[int]]] = ({}, {})
    for a in range(M1.n):
        for side, C in ((0, C1(a)), (1, C2(a))):
            if C is not None:
                for b in iter_bits(C & ~(1 << a)):
                    pred[side].setdefault(b, []).append(a)
    # state (a, p): a chain of parity p (None: length 0) starts at a
    start = (x, None)
    parent: dict[tuple[int, str | None], tuple[int, str | None] | None] = {start: None}
    queue = deque([start])
    while queue:
        b, p = queue.popleft()
        if p in (None, ODD):
            for a in pred[0].get(b, ()):
                if (a, EVEN) not in parent:
                    parent[(a, EVEN)] = (b, p)
                    queue.append((a, EVEN))
        if p in (None, EVEN):
            for a in pred[1].get(b, ()):
                if (a, ODD) not in parent:
                    parent[(a, ODD)] = (b, p)
                    queue.append((a, ODD))
    members = 0
    chains: dict[int, ExchangeChain] = {}
    for state in parent:  # insertion order is BFS order, so first hit is shortest
        a = state[0]
        if a in chains:
            continue
        path = [state]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        chains[a] = _chain_from_path(path, C1, C2)
        members |= 1 << a
    result = ReachabilitySet(Representation(I1, I2), x, members, chains)
    bad = property2_violation(M1, I1, members)
    if bad is not None:
        raise AssertionError(f"reachability set violates the closure property at element {bad}")
    return result


def property2_violation(M1: Matroid, I1: int, A: int) -> int | None:
    """First ``y`` outside ``A`` whose circuit in ``I1 + y`` meets ``A``."""
    for y in range(M1.n):
        if A >> y & 1:
            continue
        C = M1.fundamental_circuit(I1, y)
        if C is not None and C & A:
            return y
    return None


def forward_chains(M1: Matroid, M2: Matroid, I1: int, I2: int, y: int) -> dict[int, ExchangeChain]:
    """Shortest chains with first element ``y``, keyed by their last element."""
    C1, C2 = _Circuits(M1, I1), _Circuits(M2, I2)
    starts = [(y, EVEN), (y, ODD)]
    parent: dict[tuple[int, str], tuple[int, str] | None] = {s: None for s in starts}
    order: list[tuple[int, str]] = []
    queue = deque(starts)
    while queue:
        a, p = queue.popleft()
        C = (C1 if p == EVEN else C2)(a)
        if C is None:
            continue
        for b in iter_bits(C & ~(1 << a)):
            nxt = (b, _flip(p))
            if nxt not in parent:
                parent[nxt] = (a, p)
                order.append(nxt)
                queue.append(nxt)
    chains: dict[int, ExchangeChain] = {}
    for state in order:
        b = state[0]
        if b in chains:
            continue
        path = [state]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        chains[b] = _chain_from_path(path, C1, C2)
    return chains


def add_element(M1: Matroid, M2: Matroid, rep: Representation, y: int) -> Representation | None:
    """Representation of ``I + y``, or ``None`` when ``I + y`` is not in the union."""
    I1, I2 = rep.I1, rep.I2
    yb = 1 << y
    if (I1 | I2) & yb:
        return rep
    if M1.indep(I1 | yb):
        return Representation(I1 | yb, I2)
    if M2.indep(I2 | yb):
        return Representation(I1, I2 | yb)
    for b, ch in forward_chains(M1, M2, I1, I2, y).items():
        # b can be doubled into the other side: a chain ending in I1 & I2 adds y outright
        if I1 >> b & 1 and not I2 >> b & 1 and M2.indep(I2 | (1 << b)):
            J1, J2 = I1, I2 | (1 << b)
        elif I2 >> b & 1 and not I1 >> b & 1 and M1.indep(I1 | (1 << b)):
            J1, J2 = I1 | (1 << b), I2
        else:
            continue
        shortest = reachability(M1, M2, J1, J2, b).chains.get(y)
        if shortest is None:  # pragma: no cover - forward chain stays valid in the larger sets
            raise AssertionError("lost exchange chain after doubling its end")
        out = apply_chain(shortest, M1, M2, J1, J2)
        assert out.set == (I1 | I2 | yb)
        return out.normalized()
    return None


def union_membership(M1: Matroid, M2: Matroid, X: int) -> Representation | None:
    """Certified representation of ``X`` in the union system, or ``None``."""
    M1, M2 = align(M1, M2)
    if X & ~M1.full:
        raise ValueError("subset not within ground set")
    rep = Representation(0, 0)
    for y in iter_bits(X):
        nxt = add_element(M1, M2, rep, y)
        if nxt is None:
            return None
        rep = nxt.normalized()
    return rep


def union_base(M1: Matroid, M2: Matroid, X: int | None = None) -> Representation:
    """Maximal union-independent subset of ``X``, grown in ground order."""
    M1, M2 = align(M1, M2)
    X = M1.full if X is None else X
    rep = Representation(0, 0)
    for y in iter_bits(X):
        nxt = add_element(M1, M2, rep, y)
        if nxt is not None:
            rep = nxt.normalized()
    return rep


def maximal_representation(M1: Matroid, M2: Matroid, rep: Representation) -> Representation:
    """Grow ``I1`` and ``I2`` to bases of ``M1|I`` and ``M2|I``."""
    S = rep.set
    return Representation(M1.basis_of(S, start=rep.I1), M2.basis_of(S, start=rep.I2))


@dataclass
class AugmentResult:
    y: int | None
    rep: Representation | None
    chain: ExchangeChain | None = None
    improvement: Representation | None = None

    @property
    def contradiction(self) -> bool:
        return self.rep is None


def augment(M1: Matroid, M2: Matroid, B: Representation, I: Representation, x: int) -> AugmentResult:
    """Exchange for a maximal ``B``: some ``y`` in ``B - I`` with ``(I + y) - x`` in the union.

    If the reachability set of ``x`` misses ``B - I`` the result instead
    carries a representation covering ``B + x``, which cannot happen when
    ``B`` is maximal.
    """
    M1, M2 = align(M1, M2)
    check_representation(M1, M2, B)
    check_representation(M1, M2, I)
    Bs, Is = B.set, I.set
    if not (Is & ~Bs) >> x & 1:
        raise ValueError("x must lie in I - B")
    I = maximal_representation(M1, M2, I)
    xb = 1 << x
    for y in iter_bits(Bs & ~Is):
        yb = 1 << y
        if M1.indep(I.I1 | yb):
            return AugmentResult(y, Representation((I.I1 | yb) & ~xb, I.I2 & ~xb))
        if M2.indep(I.I2 | yb):
            return AugmentResult(y, Representation(I.I1 & ~xb, (I.I2 | yb) & ~xb))
    A = reachability(M1, M2, I.I1, I.I2, x)
    hits = A.members & Bs & ~Is
    if hits:
        y = next(iter_bits(hits))
        ch = A.chains[y]
        out = apply_chain(ch, M1, M2, I.I1, I.I2)
        # x may sit on both sides, in which case the chain yields all of I + y
        return AugmentResult(y, Representation(out.I1 & ~xb, out.I2 & ~xb), chain=ch)
    Am = A.members
    B1 = (B.I1 & ~(B.I1 & Am)) | (I.I1 & Am)
    B2 = (B.I2 & ~(B.I2 & Am)) | (I.I2 & Am)
    return AugmentResult(None, None, improvement=Representation(B1, B2))


def cochain_augment(M1: Matroid, M2: Matroid, I: Representation, J: Representation, y: int) -> AugmentResult:
    """For ``y`` in ``J - I``: ``I + y`` itself, or some ``x`` in ``I - J`` with ``(I + y) - x``.

    ``result.y`` holds the removed element ``x`` (``None`` when ``I + y`` is
    already in the union).
    """
    M1, M2 = align(M1, M2)
    check_representation(M1, M2, I)
    check_representation(M1, M2, J)
    Is, Js = I.set, J.set
    if not (Js & ~Is) >> y & 1:
        raise ValueError("y must lie in J - I")
    grown = add_element(M1, M2, I, y)
    if grown is not None:
        return AugmentResult(None, grown)
    I = maximal_representation(M1, M2, I)
    chains = forward_chains(M1, M2, I.I1, I.I2, y)
    for x in sorted(chains):
        if (Is & ~Js) >> x & 1:
            ch = chains[x]
            return AugmentResult(x, apply_chain(ch, M1, M2, I.I1, I.I2), chain=ch)
    raise AssertionError("no exchange element found in I - J")


# -- k-fold unions ---------------------------------------------------------


class UnionMatroid(Matroid):
    """The union of two matroids as an independence oracle."""

    def __init__(self, M1: Matroid, M2: Matroid):
        M1, M2 = align(M1, M2)
        super().__init__(M1.ground, {"type": "union", "parts": _flatten(M1) + _flatten(M2)})
        self.left, self.right = M1, M2

    def _indep(self, mask: int) -> bool:
        return union_membership(self.left, self.right, mask) is not None

    def split(self, X: int) -> list[int] | None:
        rep = union_membership(self.left, self.right, X)
        if rep is None:
            return None
        return _split(self.left, rep.I1) + [rep.I2]


def _flatten(M: Matroid) -> list[dict]:
    if isinstance(M, UnionMatroid):
        return _flatten(M.left) + _flatten(M.right)
    return [M.descriptor]


def _split(M: Matroid, X: int) -> list[int]:
    if isinstance(M, UnionMatroid):
        parts = M.split(X)
        assert parts is not None
        return parts
    return [X]


def k_fold_matroid(Ms: Sequence[Matroid]) -> Matroid:
    if not Ms:
        raise ValueError("need at least one matroid")
    U = Ms[0]
    for M in Ms[1:]:
        U = UnionMatroid(U, M)
    return U


def normalize_pieces(pieces: Sequence[int]) -> list[int]:
    out, seen = [], 0
    for p in pieces:
        out.append(p & ~seen)
        seen |= p
    return out


def k_fold_union(Ms: Sequence[Matroid], X: int) -> list[int] | None:
    """``k`` independent sets (one per matroid, pairwise disjoint) covering ``X``, or ``None``."""
    U = k_fold_matroid(Ms)
    if not isinstance(U, UnionMatroid):
        return [X] if U.indep(X) else None
    parts = U.split(X)
    return None if parts is None else normalize_pieces(parts)


def k_fold_base(Ms: Sequence[Matroid], X: int | None = None) -> list[int]:
    U = k_fold_matroid(Ms)
    B = U.basis_of(X)
    if not isinstance(U, UnionMatroid):
        return [B]
    parts = U.split(B)
    assert parts is not None
    return normalize_pieces(parts)


# -- brute-force oracles ---------------------------------------------------


def union_family_bruteforce(M1: Matroid, M2: Matroid) -> set[int]:
    M1, M2 = align(M1, M2)
    A, B = M1.independent_sets(), M2.independent_sets()
    return {a | b for a in A for b in B}


def k_fold_family_bruteforce(Ms: Sequence[Matroid]) -> set[int]:
    fam = {0}
    for M in Ms:
        M = reorder(M, Ms[0].ground)
        ind = M.independent_sets()
        fam = {f | i for f in fam for i in ind}
    return fam


def shortest_chain_length_bruteforce(M1: Matroid, M2: Matroid, I1: int, I2: int, y: int, x: int,
                                     max_len: int = 8) -> int | None:
    """Shortest valid chain from ``y`` to ``x`` by exhaustive enumeration of node tuples."""
    import itertools

    M1, M2 = align(M1, M2)
    n = M1.n
    if y == x:
        return 0
    for length in range(1, max_len + 1):
        for inner in itertools.permutations([i for i in range(n) if i not in (x, y)], length - 1):
            nodes = (y, *inner, x)
            for parity in (EVEN, ODD):
                certs = []
                sides = _link_matroids(parity, length)
                for i in range(length):
                    M, I = (M1, I1) if sides[i] == EVEN else (M2, I2)
                    C = M.fundamental_circuit(I, nodes[i]) if M.indep(I) else None
                    if C is None:
                        break
                    certs.append(C)
                else:
                    ch = ExchangeChain(parity, nodes, tuple(certs))
                    if validate_chain(ch, M1, M2, I1, I2)[0]:
                        return length
    return None


__all__ = [
    "AugmentResult",
    "ExchangeChain",
    "ReachabilitySet",
    "Representation",
    "UnionMatroid",
    "add_element",
    "apply_chain",
    "augment",
    "cochain_augment",
    "forward_chains",
    "k_fold_base",
    "k_fold_family_bruteforce",
    "k_fold_matroid",
    "k_fold_union",
    "maximal_representation",
    "reachability",
    "union_base",
    "union_family_bruteforce",
    "union_membership",
    "validate_chain",
]
