"""Desk-scale matroid catalog used by the exhaustive checks.

All matroids of size ``n`` share the ground ``e0 .. e{n-1}`` so any two of
them can be united.
"""

from __future__ import annotations

from .core import (
    Matroid,
    direct_sum,
    dual,
    make_circuit_matroid,
    make_graphic,
    make_uniform,
)

# edge lists over vertices 0..; each graph is named by its shape
_GRAPHS: dict[int, list[tuple[str, list[tuple[int, int]]]]] = {
    2: [("parallel", [(0, 1), (0, 1)]), ("path", [(0, 1), (1, 2)]), ("loop+edge", [(0, 0), (0, 1)])],
    3: [("triangle", [(0, 1), (1, 2), (0, 2)]), ("path", [(0, 1), (1, 2), (2, 3)]),
        ("parallel+pendant", [(0, 1), (0, 1), (1, 2)])],
    4: [("square", [(0, 1), (1, 2), (2, 3), (3, 0)]),
        ("triangle+pendant", [(0, 1), (1, 2), (0, 2), (2, 3)]),
        ("two-parallel-pairs", [(0, 1), (0, 1), (1, 2), (1, 2)])],
    5: [("diamond", [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        ("bowtie-ish", [(0, 1), (1, 2), (0, 2), (2, 3), (2, 3)]),
        ("pentagon", [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])],
}


def ground_names(n: int) -> list[str]:
    return [f"e{i}" for i in range(n)]


def graphic(edges: list[tuple[int, int]], names: list[str]) -> Matroid:
    nv = max(max(u, v) for u, v in edges) + 1
    return make_graphic([f"v{i}" for i in range(nv)],
                        [[names[i], f"v{u}", f"v{v}"] for i, (u, v) in enumerate(edges)])


def catalog(n: int) -> list[tuple[str, Matroid]]:
    """Named matroids on ``e0..e{n-1}``: uniform, graphic, duals, direct sums."""
    g = ground_names(n)
    out: list[tuple[str, Matroid]] = []
    for k in range(0, 4):
        if k <= n:
            out.append((f"U{k},{n}", make_uniform(k, g)))
    if n >= 1:
        out.append((f"C{n}", make_circuit_matroid(g)))
    for shape, edges in _GRAPHS.get(n, []):
        out.append((f"graphic:{shape}", graphic(edges, g)))
    if 2 <= n:
        h = n // 2
        out.append((f"U1,{h}+U1,{n - h}", direct_sum([make_uniform(1, g[:h]), make_uniform(1, g[h:])])))
        out.append((f"(U1,{h}+C{n - h})*", dual(direct_sum([make_uniform(1, g[:h]), make_circuit_matroid(g[h:])]))))
    for shape, edges in _GRAPHS.get(n, []):
        out.append((f"graphic:{shape}*", dual(graphic(edges, g))))
        break
    if n >= 6:
        for m in (3, 4, 5):
            rest = n - m
            if rest >= 1:
                shape, edges = _GRAPHS[m][0] if m in _GRAPHS else ("", [])
                if edges:
                    G = graphic(edges, g[:m])
                    out.append((f"graphic:{shape}+U1,{rest}", direct_sum([G, make_uniform(1, g[m:])])))
    if n >= 4:
        out.append((f"graphic:{_GRAPHS[3][0][0]}+U2,{n - 3}",
                    direct_sum([graphic(_GRAPHS[3][0][1], g[:3]), make_uniform(min(2, n - 3), g[3:])])))
    return out


def catalog_pairs(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        items = catalog(n)
        for i, (na, A) in enumerate(items):
            for nb, B in items[i:]:
                yield n, f"{na} | {nb}", A, B


def all_catalog(max_n: int, min_n: int = 0):
    for n in range(min_n, max_n + 1):
        for name, M in catalog(n):
            yield n, name, M
