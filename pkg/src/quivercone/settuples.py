"""Tuples of finite sets and their flag-type dimension vectors."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from .quiver import DimVec, DomainError, LegExtendedQuiver

Flag = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class SetTuple:
    """Per-vertex subsets ``K_i`` of ``{1..bound_i}``, stored as sorted tuples."""

    sets: tuple[tuple[int, ...], ...]
    bound: DimVec

    def __post_init__(self):
        sets = tuple(tuple(s) for s in self.sets)
        bound = tuple(self.bound)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "bound", bound)
        if len(sets) != len(bound):
            raise DomainError("set tuple and bound have different lengths")
        for s, b in zip(sets, bound):
            if any(x >= y for x, y in zip(s, s[1:])):
                raise DomainError(f"set {s} is not strictly increasing")
            if s and (s[0] < 1 or s[-1] > b):
                raise DomainError(f"set {s} is not contained in 1..{b}")

    @classmethod
    def full(cls, d: Sequence[int]) -> SetTuple:
        """``[d]``."""
        return cls(tuple(tuple(range(1, x + 1)) for x in d), tuple(d))

    @classmethod
    def empty(cls, d: Sequence[int]) -> SetTuple:
        return cls(tuple(() for _ in d), tuple(d))

    def is_empty(self) -> bool:
        return not any(self.sets)

    def is_full(self) -> bool:
        return all(len(s) == b for s, b in zip(self.sets, self.bound))

    def complement(self) -> SetTuple:
        return SetTuple(
            tuple(
                tuple(k for k in range(1, b + 1) if k not in s)
                for s, b in zip(self.sets, self.bound)
            ),
            self.bound,
        )

    def render(self, names: Sequence[str]) -> str:
        """``{i: 1,2; j: 3}`` with empty sets omitted; the empty tuple is ``∅``."""
        parts = [
            f"{n}: {','.join(map(str, s))}" for n, s in zip(names, self.sets) if s
        ]
        return "{" + "; ".join(parts) + "}" if parts else "∅"


def weight(k: SetTuple) -> DimVec:
    return tuple(len(s) for s in k.sets)


def _check_inner(k: SetTuple, l: SetTuple) -> None:
    if l.bound != weight(k):
        raise DomainError(f"L has bound {l.bound}, expected |K| = {weight(k)}")


def height(k: SetTuple, l: SetTuple) -> int:
    """``sum_i sum_{j in L_i} (k_{i,j} - j)``."""
    _check_inner(k, l)
    return sum(ks[j - 1] - j for ks, ls in zip(k.sets, l.sets) for j in ls)


def subselect(k: SetTuple, l: SetTuple) -> SetTuple:
    """``K_L``: keep the ``j``-th smallest element of ``K_i`` for ``j in L_i``."""
    _check_inner(k, l)
    return SetTuple(
        tuple(tuple(ks[j - 1] for j in ls) for ks, ls in zip(k.sets, l.sets)),
        k.bound,
    )


def to_flag(k: SetTuple, ext: LegExtendedQuiver | None = None) -> Flag:
    """``d(K)_{i,k} = |K_i ∩ {1..k}|`` in nested form."""
    if ext is not None and ext.d != k.bound:
        raise DomainError(f"set tuple bound {k.bound} does not match {ext.d}")
    out = []
    for s, b in zip(k.sets, k.bound):
        members = set(s)
        count = 0
        leg = []
        for pos in range(1, b + 1):
            count += pos in members
            leg.append(count)
        out.append(tuple(leg))
    return tuple(out)


def is_flag_type(e: Sequence[Sequence[int]]) -> bool:
    for leg in e:
        prev = 0
        for x in leg:
            if x - prev not in (0, 1):
                return False
            prev = x
    return True


def from_flag(e: Sequence[Sequence[int]]) -> SetTuple:
    """Inverse of :func:`to_flag`: ``K_i`` collects the positions where the leg steps up."""
    if not is_flag_type(e):
        raise DomainError(f"{e} is not of flag type")
    sets = []
    for leg in e:
        prev = 0
        members = []
        for pos, x in enumerate(leg, start=1):
            if x == prev + 1:
                members.append(pos)
            prev = x
        sets.append(tuple(members))
    return SetTuple(tuple(sets), tuple(len(leg) for leg in e))


def expand(e: Sequence[Sequence[int]], f: Sequence[Sequence[int]]) -> Flag:
    """The ``e``-expansion of ``f``: ``(exp_e f)_{i,k} = f_{i,j}`` where ``j = e_{i,k}``.

    ``f`` lives on the leg extension for ``|e|``; index ``j = 0`` reads as 0.
    """
    if not is_flag_type(e) or not is_flag_type(f):
        raise DomainError("expansion needs flag-type arguments")
    out = []
    for ei, fi in zip(e, f):
        top = ei[-1] if ei else 0
        if len(fi) != top:
            raise DomainError(f"f leg has length {len(fi)}, expected |e|_i = {top}")
        if any(x > pos for pos, x in enumerate(fi, start=1)):
            raise DomainError(f"f leg {fi} exceeds the canonical flag")
        out.append(tuple(fi[j - 1] if j else 0 for j in ei))
    return tuple(out)


def _subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets of ``{1..n}`` in binary-counter order."""
    return [
        tuple(k for k in range(1, n + 1) if rank >> (k - 1) & 1)
        for rank in range(1 << n)
    ]


def enumerate_settuples(d: Sequence[int]) -> Iterator[SetTuple]:
    """All ``K ⊆ [d]``: vertex order first, binary-counter order within a vertex."""
    d = tuple(d)
    for sets in product(*(_subsets(x) for x in d)):
        yield SetTuple(sets, d)


def flags_below(e: Sequence[Sequence[int]]) -> Iterator[Flag]:
    """Flag-type vectors ``e' <= e`` on the same legs, in enumeration order."""
    per_leg = []
    for leg in e:
        options = []
        for s in _subsets(len(leg)):
            cand = to_flag(SetTuple((s,), (len(leg),)))[0]
            if all(a <= b for a, b in zip(cand, leg)):
                options.append(cand)
        per_leg.append(options)
    yield from product(*per_leg)
