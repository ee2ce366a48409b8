"""Finite quivers, dimension vectors, the Euler form and leg extensions.

Dimension vectors are plain tuples of nonnegative ints aligned with
``Quiver.vertices``; :meth:`Quiver.dim` converts from a vertex mapping.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

DimVec = tuple[int, ...]


class DomainError(ValueError):
    """Input outside the domain of an operation."""


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph; loops and parallel arrows allowed."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "arrows", tuple((str(s), str(t)) for s, t in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError(f"duplicate vertex identifiers in {self.vertices}")
        known = set(self.vertices)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise DomainError(f"arrow {s}->{t} has an undeclared endpoint")

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: n for n, v in enumerate(self.vertices)}

    @cached_property
    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        """Arrows as (source index, target index) pairs."""
        return tuple((self.index[s], self.index[t]) for s, t in self.arrows)

    def __len__(self):
        return len(self.vertices)

    def dim(self, d: Mapping[str, int] | Sequence[int]) -> DimVec:
        """Normalise ``d`` to a tuple aligned with the vertex order."""
        if isinstance(d, Mapping):
            if set(d) != set(self.vertices):
                raise DomainError(
                    f"dimension vector keys {sorted(d)} do not match vertices "
                    f"{list(self.vertices)}"
                )
            out = tuple(int(d[v]) for v in self.vertices)
        else:
            out = tuple(int(x) for x in d)
            if len(out) != len(self.vertices):
                raise DomainError(
                    f"dimension vector of length {len(out)} for a quiver with "
                    f"{len(self.vertices)} vertices"
                )
        if any(x < 0 for x in out):
            raise DomainError(f"negative entry in dimension vector {out}")
        return out

    def zero(self) -> DimVec:
        return (0,) * len(self.vertices)

    def as_mapping(self, d: Sequence[int]) -> dict[str, int]:
        return dict(zip(self.vertices, d))

    def in_degree(self, v: str) -> int:
        return sum(1 for _, t in self.arrows if t == v)

    def out_degree(self, v: str) -> int:
        return sum(1 for s, _ in self.arrows if s == v)


def leq(e: Sequence[int], d: Sequence[int]) -> bool:
    """Componentwise order ``e <= d``."""
    return all(a <= b for a, b in zip(e, d))


def sub(d: Sequence[int], e: Sequence[int]) -> DimVec:
    return tuple(a - b for a, b in zip(d, e))


def add(d: Sequence[int], e: Sequence[int]) -> DimVec:
    return tuple(a + b for a, b in zip(d, e))


def vectors_below(d: Sequence[int]) -> Iterable[DimVec]:
    """All ``e <= d`` in lexicographic order."""
    if not d:
        yield ()
        return
    for head in range(d[0] + 1):
        for rest in vectors_below(d[1:]):
            yield (head,) + rest


def euler_form(q: Quiver, d, e) -> int:
    """``sum_i d_i e_i - sum_{a: i->j} d_i e_j``, arrows counted with multiplicity."""
    d = q.dim(d)
    e = q.dim(e)
    total = sum(x * y for x, y in zip(d, e))
    for s, t in q.arrow_indices:
        total -= d[s] * e[t]
    return total


def euler_pairing(q: Quiver):
    """Return a fast unchecked ``(d, e) -> <d, e>`` for tuples in vertex order."""
    arrows = q.arrow_indices
    n = len(q.vertices)

    def pairing(d, e):
        total = 0
        for i in range(n):
            total += d[i] * e[i]
        for s, t in arrows:
            total -= d[s] * e[t]
        return total

    return pairing


def leg_vertex(i: str, k: int) -> str:
    return f"({i},{k})"


@dataclass(frozen=True)
class LegExtendedQuiver:
    """``q`` with a leg ``(i,1) -> ... -> (i,d_i)`` at each vertex.

    Original arrows connect the top vertices ``(i, d_i)``. Flag-shaped vectors
    on this quiver are stored nested: ``e[n][k-1]`` is the entry at
    ``(vertices[n], k)``.
    """

    quiver: Quiver
    hat_d: DimVec
    origin: Quiver
    d: DimVec
    positions: tuple[tuple[int, ...], ...] = field(repr=False)

    def flatten(self, nested: Sequence[Sequence[int]]) -> DimVec:
        return tuple(x for leg in nested for x in leg)

    def unflatten(self, flat: Sequence[int]) -> tuple[DimVec, ...]:
        return tuple(tuple(flat[p] for p in leg) for leg in self.positions)

    @property
    def hat(self) -> tuple[DimVec, ...]:
        """``hat_d`` in nested form."""
        return self.unflatten(self.hat_d)

    def top(self, nested: Sequence[Sequence[int]]) -> DimVec:
        """``|e|``: the entries at the top vertices, zero on empty legs."""
        return tuple(leg[-1] if leg else 0 for leg in nested)


def leg_extend(q: Quiver, d) -> LegExtendedQuiver:
    d = q.dim(d)
    vertices: list[str] = []
    positions: list[tuple[int, ...]] = []
    arrows: list[tuple[str, str]] = []
    for v, dv in zip(q.vertices, d):
        start = len(vertices)
        vertices.extend(leg_vertex(v, k) for k in range(1, dv + 1))
        positions.append(tuple(range(start, start + dv)))
    for v, dv in zip(q.vertices, d):
        arrows.extend(
            (leg_vertex(v, k), leg_vertex(v, k + 1)) for k in range(1, dv)
        )
    dims = dict(zip(q.vertices, d))
    for s, t in q.arrows:
        # arrows touching a zero-dimensional vertex carry no data
        if dims[s] > 0 and dims[t] > 0:
            arrows.append((leg_vertex(s, dims[s]), leg_vertex(t, dims[t])))
    hat_d = tuple(k for dv in d for k in range(1, dv + 1))
    return LegExtendedQuiver(
        quiver=Quiver(tuple(vertices), tuple(arrows)),
        hat_d=hat_d,
        origin=q,
        d=d,
        positions=tuple(positions),
    )


def support(q: Quiver, d) -> Quiver:
    """Full subquiver on the vertices with ``d_i > 0``."""
    d = q.dim(d)
    keep = {v for v, x in zip(q.vertices, d) if x > 0}
    return Quiver(
        tuple(v for v in q.vertices if v in keep),
        tuple((s, t) for s, t in q.arrows if s in keep and t in keep),
    )


def _reachable(start: str, adjacency: Mapping[str, list[str]]) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(q: Quiver) -> bool:
    if not q.vertices:
        return False
    fwd: dict[str, list[str]] = {v: [] for v in q.vertices}
    bwd: dict[str, list[str]] = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        fwd[s].append(t)
        bwd[t].append(s)
    root = q.vertices[0]
    everything = set(q.vertices)
    return _reachable(root, fwd) == everything and _reachable(root, bwd) == everything


def is_single_oriented_cycle(q: Quiver) -> bool:
    return is_strongly_connected(q) and all(
        q.in_degree(v) == 1 and q.out_degree(v) == 1 for v in q.vertices
    )


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph."""
    if not q.vertices:
        return False
    adj: dict[str, list[str]] = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        adj[s].append(t)
        adj[t].append(s)
    return _reachable(q.vertices[0], adj) == set(q.vertices)


def loop_quiver(m: int, name: str = "1") -> Quiver:
    """One vertex with ``m`` loops."""
    return Quiver((name,), ((name, name),) * m)


def subspace_quiver(m: int) -> Quiver:
    """Vertices ``i1..im, j`` with one arrow ``ik -> j`` each."""
    sources = tuple(f"i{k}" for k in range(1, m + 1))
    return Quiver(sources + ("j",), tuple((s, "j") for s in sources))
