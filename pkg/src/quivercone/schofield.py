"""General subrepresentation vectors via Schofield's recursion.

``e`` is a general subrepresentation vector of ``d`` exactly when
``<e', d - e> >= 0`` for every general subrepresentation vector ``e'`` of ``e``.
Results are memoised per quiver.
"""

from __future__ import annotations

import threading
from weakref import WeakKeyDictionary

from .quiver import (
    DimVec,
    DomainError,
    LegExtendedQuiver,
    Quiver,
    euler_pairing,
    leq,
    sub,
    vectors_below,
)
from .settuples import Flag, flags_below, is_flag_type


class SubrepSetCache:
    """Memo ``d -> S_Q(d)`` for one quiver."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.memo: dict[DimVec, frozenset[DimVec]] = {}
        self._pair = euler_pairing(quiver)
        self._lock = threading.RLock()

    def get(self, d: DimVec) -> frozenset[DimVec]:
        with self._lock:
            return self._compute(d)

    def _compute(self, d: DimVec) -> frozenset[DimVec]:
        hit = self.memo.get(d)
        if hit is not None:
            return hit
        zero = (0,) * len(d)
        members = []
        for e in vectors_below(d):
            if e == zero or e == d:
                members.append(e)
                continue
            rest = sub(d, e)
            if all(self._pair(e1, rest) >= 0 for e1 in self._compute(e)):
                members.append(e)
        result = frozenset(members)
        self.memo[d] = result
        return result


_caches: WeakKeyDictionary = WeakKeyDictionary()
_caches_lock = threading.Lock()


def cache_for(q: Quiver) -> SubrepSetCache:
    with _caches_lock:
        cache = _caches.get(q)
        if cache is None:
            cache = _caches[q] = SubrepSetCache(q)
        return cache


def general_subrep_set(q: Quiver, d) -> frozenset[DimVec]:
    return cache_for(q).get(q.dim(d))


def is_general_subrep(q: Quiver, e, d) -> bool:
    e, d = q.dim(e), q.dim(d)
    if not leq(e, d):
        raise DomainError(f"{e} is not below {d}")
    return e in general_subrep_set(q, d)


def ext_generic(q: Quiver, d, e) -> int:
    """Generic ``dim Ext^1`` between representations of dimensions ``d`` and ``e``.

    Equals ``max(-<d', e>)`` over general subrepresentation vectors ``d'`` of
    ``d``; ``d' = 0`` makes it nonnegative.
    """
    d, e = q.dim(d), q.dim(e)
    pair = euler_pairing(q)
    return -min(pair(d1, e) for d1 in general_subrep_set(q, d))


class FlagSubrepCache:
    """Memo ``e -> S_{Q_d}(e)^flag`` on one leg-extended quiver."""

    def __init__(self, ext: LegExtendedQuiver):
        self.ext = ext
        self.memo: dict[Flag, frozenset[Flag]] = {}
        pair = euler_pairing(ext.quiver)
        flat = ext.flatten
        self._pair = lambda x, y: pair(flat(x), flat(y))
        self._lock = threading.RLock()

    def get(self, e: Flag) -> frozenset[Flag]:
        with self._lock:
            return self._compute(e)

    def _compute(self, e: Flag) -> frozenset[Flag]:
        hit = self.memo.get(e)
        if hit is not None:
            return hit
        members = []
        for e1 in flags_below(e):
            if e1 == e or not any(any(leg) for leg in e1):
                members.append(e1)
                continue
            rest = tuple(
                tuple(a - b for a, b in zip(x, y)) for x, y in zip(e, e1)
            )
            if all(self._pair(e2, rest) >= 0 for e2 in self._compute(e1)):
                members.append(e1)
        result = frozenset(members)
        self.memo[e] = result
        return result


def flag_general_subrep_set(ext: LegExtendedQuiver, e=None) -> frozenset[Flag]:
    """Flag-restricted recursion on ``Q_d``; ``e`` defaults to ``hat_d``."""
    e = ext.hat if e is None else tuple(tuple(leg) for leg in e)
    if len(e) != len(ext.d) or any(len(a) != b for a, b in zip(e, ext.d)):
        raise DomainError(f"{e} does not fit the legs of {ext.d}")
    if not is_flag_type(e):
        raise DomainError(f"{e} is not of flag type")
    return FlagSubrepCache(ext).get(e)
