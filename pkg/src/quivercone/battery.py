"""Small quivers and dimension vectors for exhaustive checks."""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from .quiver import DimVec, Quiver, is_connected


def _canonical(n: int, arrows) -> tuple:
    return min(
        tuple(sorted((p[s], p[t]) for s, t in arrows)) for p in permutations(range(n))
    )


def connected_quivers(max_vertices: int = 3, max_arrows: int = 3) -> list[Quiver]:
    """Connected quivers up to isomorphism, loops and parallel arrows included."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = [(s, t) for s in range(n) for t in range(n)]
        seen = set()
        for m in range(max_arrows + 1):
            for arrows in combinations_with_replacement(pairs, m):
                key = _canonical(n, arrows)
                if key in seen:
                    continue
                seen.add(key)
                names = tuple(str(v + 1) for v in range(n))
                q = Quiver(names, tuple((names[s], names[t]) for s, t in key))
                if is_connected(q):
                    out.append(q)
    return out


def dimension_vectors(n: int, max_total: int) -> list[DimVec]:
    """All ``d`` on ``n`` vertices with ``sum(d) <= max_total``."""
    if n == 0:
        return [()]
    return [
        (head,) + rest
        for head in range(max_total + 1)
        for rest in dimension_vectors(n - 1, max_total - head)
    ]


def battery(max_vertices: int = 3, max_arrows: int = 3, max_total: int = 6):
    """Yield ``(quiver, d)`` for every battery quiver and every small ``d``."""
    for q in connected_quivers(max_vertices, max_arrows):
        for d in dimension_vectors(len(q.vertices), max_total):
            yield q, d
