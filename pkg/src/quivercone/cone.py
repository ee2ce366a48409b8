"""The momentum map image as a cone of eigenvalue tuples.

A spectrum ``a`` (weakly increasing eigenvalues per vertex) lies in the image
iff its total is zero and ``a_K = sum_i sum_{k in K_i} a_{i,k} >= 0`` for every
``K`` in the recursively defined family :func:`hat_s_direct`.
"""

from __future__ import annotations

import threading
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from weakref import WeakKeyDictionary

from .quiver import (
    DimVec,
    DomainError,
    Quiver,
    euler_pairing,
    is_single_oriented_cycle,
    is_strongly_connected,
    leg_extend,
    support,
)
from .schofield import flag_general_subrep_set, general_subrep_set
from .settuples import (
    SetTuple,
    enumerate_settuples,
    expand,
    flags_below,
    from_flag,
    height,
    to_flag,
    weight,
)


def _exact(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(float(x))


@dataclass(frozen=True)
class Spectrum:
    """Weakly increasing eigenvalues per vertex, in vertex order."""

    eigenvalues: tuple[tuple, ...]

    def __post_init__(self):
        vals = tuple(tuple(v) for v in self.eigenvalues)
        object.__setattr__(self, "eigenvalues", vals)
        for v in vals:
            if any(x > y for x, y in zip(v, v[1:])):
                raise DomainError(f"eigenvalues {v} are not weakly increasing")

    @classmethod
    def from_mapping(cls, q: Quiver, values: Mapping[str, Sequence]) -> Spectrum:
        if set(values) - set(q.vertices):
            raise DomainError(f"unknown vertices {sorted(set(values) - set(q.vertices))}")
        return cls(tuple(tuple(values.get(v, ())) for v in q.vertices))

    @property
    def dims(self) -> DimVec:
        return tuple(len(v) for v in self.eigenvalues)

    def exact(self) -> Spectrum:
        return Spectrum(tuple(tuple(_exact(x) for x in v) for v in self.eigenvalues))

    def trace(self):
        return sum((x for v in self.eigenvalues for x in v), Fraction(0))

    def a(self, k: SetTuple):
        """``a_K``."""
        return sum(
            (v[j - 1] for v, s in zip(self.eigenvalues, k.sets) for j in s), Fraction(0)
        )


@dataclass(frozen=True)
class ThetaVector:
    """Weights on the leg vertices, nested like flag vectors: ``theta[n][k-1]``."""

    theta: tuple[tuple, ...]

    def pair(self, e) -> Fraction:
        """``sum_{i,k} e_{i,k} theta_{i,k}``."""
        return sum(
            (x * t for leg_e, leg_t in zip(e, self.theta) for x, t in zip(leg_e, leg_t)),
            Fraction(0),
        )


def theta_of_spectrum(s: Spectrum) -> ThetaVector:
    """``theta_{i,k} = a_{i,k} - a_{i,k+1}`` for ``k < d_i``; ``theta_{i,d_i} = a_{i,d_i}``."""
    out = []
    for v in s.eigenvalues:
        out.append(tuple(v[k] - v[k + 1] for k in range(len(v) - 1)) + tuple(v[-1:]))
    return ThetaVector(tuple(out))


def spectrum_of_theta(t: ThetaVector) -> Spectrum:
    out = []
    for leg in t.theta:
        if any(x > 0 for x in leg[:-1]):
            raise DomainError(f"theta {leg} has a positive entry below the top")
        vals = []
        acc = 0
        for x in reversed(leg):
            acc = acc + x
            vals.append(acc)
        out.append(tuple(reversed(vals)))
    return Spectrum(tuple(out))


class HatSCache:
    """Memo ``d -> hat S(d)`` for one quiver."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.memo: dict[DimVec, frozenset[SetTuple]] = {}
        self._lock = threading.RLock()

    def get(self, d: DimVec) -> frozenset[SetTuple]:
        with self._lock:
            return self._compute(d)

    def _compute(self, d: DimVec) -> frozenset[SetTuple]:
        hit = self.memo.get(d)
        if hit is not None:
            return hit
        arrows = self.quiver.arrow_indices
        members = []
        for k in enumerate_settuples(d):
            w = weight(k)
            if w == d:
                # only [d] has full weight; its inequality is the trace row
                members.append(k)
                continue
            deficit = [x - y for x, y in zip(d, w)]
            for l in self._compute(w):
                rhs = sum(len(l.sets[i]) * deficit[j] for i, j in arrows)
                if height(k, l) < rhs:
                    break
            else:
                members.append(k)
        result = frozenset(members)
        self.memo[d] = result
        return result


_hat_caches: WeakKeyDictionary = WeakKeyDictionary()
_hat_lock = threading.Lock()


def _hat_cache(q: Quiver) -> HatSCache:
    with _hat_lock:
        cache = _hat_caches.get(q)
        if cache is None:
            cache = _hat_caches[q] = HatSCache(q)
        return cache


def hat_s_direct(q: Quiver, d) -> frozenset[SetTuple]:
    """``hat S(d)`` by the height recursion on set tuples."""
    return _hat_cache(q).get(q.dim(d))


def hat_s_via_leg(q: Quiver, d) -> frozenset[SetTuple]:
    """``hat S(d)`` from the flag-type general subrepresentations of ``hat d`` on ``Q_d``."""
    ext = leg_extend(q, d)
    return frozenset(from_flag(e) for e in flag_general_subrep_set(ext))


def hat_s_via_expansion(q: Quiver, d) -> frozenset[SetTuple]:
    """``hat S(d)`` from the recursion on flag vectors using expansions.

    A flag vector ``e <= hat d`` is kept iff ``<exp_e f, hat d - e> >= 0`` on
    ``Q_d`` for every kept ``f`` of ``|e|``.
    """
    memo: dict[DimVec, frozenset] = {}

    def compute(d: DimVec):
        if d in memo:
            return memo[d]
        ext = leg_extend(q, d)
        pair = euler_pairing(ext.quiver)
        hat = ext.hat
        kept = []
        for e in flags_below(hat):
            top = ext.top(e)
            if top == d:
                kept.append(e)
                continue
            rest = ext.flatten(
                tuple(tuple(a - b for a, b in zip(x, y)) for x, y in zip(hat, e))
            )
            if all(pair(ext.flatten(expand(e, f)), rest) >= 0 for f in compute(top)):
                kept.append(e)
        memo[d] = frozenset(kept)
        return memo[d]

    return frozenset(from_flag(e) for e in compute(q.dim(d)))


def sorted_tuples(tuples) -> list[SetTuple]:
    """Order set tuples as :func:`enumerate_settuples` emits them."""
    tuples = list(tuples)
    if not tuples:
        return []
    rank = {k: n for n, k in enumerate(enumerate_settuples(tuples[0].bound))}
    return sorted(tuples, key=rank.__getitem__)


def nontrivial(tuples) -> list[SetTuple]:
    return [k for k in sorted_tuples(tuples) if not (k.is_empty() or k.is_full())]


@dataclass(frozen=True)
class MembershipResult:
    inside: bool
    trace: Fraction
    violated: SetTuple | None = None
    tight: tuple[SetTuple, ...] = ()

    def __bool__(self):
        return self.inside


def membership(q: Quiver, d, s: Spectrum, tolerance=0) -> MembershipResult:
    """Decide whether ``s`` is the spectrum of a point of the image.

    On failure ``violated`` is the first violated ``K`` in enumeration order, or
    ``None`` when the trace is nonzero. On success ``tight`` lists ``K`` with
    ``a_K`` within ``tolerance`` of zero.
    """
    d = q.dim(d)
    if s.dims != d:
        raise DomainError(f"spectrum has shape {s.dims}, expected {d}")
    s = s.exact()
    tol = _exact(tolerance)
    trace = s.trace()
    if abs(trace) > tol:
        return MembershipResult(False, trace)
    tight = []
    for k in nontrivial(hat_s_direct(q, d)):
        value = s.a(k)
        if value < -tol:
            return MembershipResult(False, trace, violated=k)
        if value <= tol:
            tight.append(k)
    return MembershipResult(True, trace, tight=tuple(tight))


def scalar_membership(q: Quiver, d, theta) -> bool:
    """Whether the scalar tuple ``(theta_i * id)`` lies in the image."""
    d = q.dim(d)
    if isinstance(theta, Mapping):
        theta = [theta[v] for v in q.vertices]
    theta = [_exact(x) for x in theta]

    def pair(e):
        return sum((t * x for t, x in zip(theta, e)), Fraction(0))

    if pair(d) != 0:
        return False
    return all(pair(e) >= 0 for e in general_subrep_set(q, d))


@dataclass(frozen=True)
class ConeDescription:
    """H-representation: ``sum(row * a) == 0`` for the trace row, ``>= 0`` otherwise."""

    quiver: Quiver
    dimension_vector: DimVec
    tuples: tuple[SetTuple, ...]

    @property
    def coordinates(self) -> list[tuple[str, int]]:
        return [
            (v, k)
            for v, dv in zip(self.quiver.vertices, self.dimension_vector)
            for k in range(1, dv + 1)
        ]

    def row(self, k: SetTuple) -> list[int]:
        return [int(j in s) for s, dv in zip(k.sets, k.bound) for j in range(1, dv + 1)]

    @property
    def equality(self) -> list[int]:
        return [1] * sum(self.dimension_vector)

    @property
    def rows(self) -> list[list[int]]:
        return [self.row(k) for k in self.tuples]

    def render(self, fmt: str = "tuples") -> str:
        names = self.quiver.vertices
        lines = []
        if fmt == "matrix":
            lines.append("# " + " ".join(f"{v}:{k}" for v, k in self.coordinates))
            lines.append("= " + " ".join(map(str, self.equality)))
            lines.extend(">= " + " ".join(map(str, r)) for r in self.rows)
        else:
            lines.append("= " + SetTuple.full(self.dimension_vector).render(names))
            lines.extend(">= " + k.render(names) for k in self.tuples)
        return "\n".join(lines)


def emit_inequalities(q: Quiver, d) -> ConeDescription:
    d = q.dim(d)
    return ConeDescription(q, d, tuple(nontrivial(hat_s_direct(q, d))))


def is_maximal_image(q: Quiver, d) -> bool:
    """``hat S(d) = {∅, [d]}``."""
    d = q.dim(d)
    return hat_s_direct(q, d) == {SetTuple.empty(d), SetTuple.full(d)}


def maximal_image_criterion(q: Quiver, d) -> bool:
    """Graph-theoretic test for the existence of an irreducible representation."""
    d = q.dim(d)
    if not any(d):
        return True
    supp = support(q, d)
    dims = q.as_mapping(d)
    if len(supp.vertices) == 1 and not supp.arrows:
        # a single vertex without loops carries only the simple representation
        return dims[supp.vertices[0]] == 1
    if is_single_oriented_cycle(supp):
        return all(dims[v] == 1 for v in supp.vertices)
    if not is_strongly_connected(supp):
        return False
    for v in supp.vertices:
        outgoing = sum(dims[t] for s, t in supp.arrows if s == v)
        incoming = sum(dims[s] for s, t in supp.arrows if t == v)
        if not (outgoing >= dims[v] <= incoming):
            return False
    return True


def complementary_pair(q: Quiver, d) -> SetTuple | None:
    """A nontrivial ``K`` with ``K`` and its complement both in ``hat S(d)``."""
    members = hat_s_direct(q, d)
    for k in nontrivial(members):
        if k.complement() in members:
            return k
    return None


def has_positive_volume(q: Quiver, d) -> bool:
    return complementary_pair(q, d) is None


def sufficient_volume_criterion(q: Quiver, d) -> bool:
    """``<hat d, e_v> + <e_v, hat d> <= 0`` at every vertex ``v`` of ``Q_d``, strictly at some top vertex."""
    d = q.dim(d)
    if not d or not all(d):
        return False
    ext = leg_extend(q, d)
    pair = euler_pairing(ext.quiver)
    n = len(ext.hat_d)
    strict = False
    tops = {leg[-1] for leg in ext.positions}
    for v in range(n):
        unit = tuple(int(w == v) for w in range(n))
        value = pair(ext.hat_d, unit) + pair(unit, ext.hat_d)
        if value > 0:
            return False
        if value < 0 and v in tops:
            strict = True
    return strict


def canonical_interior_spectrum(q: Quiver, d) -> Spectrum:
    """Spectrum for the weights ``theta(e) = <e, hat d> - <hat d, e>`` on ``Q_d``.

    When the image has positive volume this point satisfies every nontrivial
    inequality strictly.
    """
    d = q.dim(d)
    ext = leg_extend(q, d)
    pair = euler_pairing(ext.quiver)
    n = len(ext.hat_d)
    flat = []
    for v in range(n):
        unit = tuple(int(w == v) for w in range(n))
        flat.append(Fraction(pair(unit, ext.hat_d) - pair(ext.hat_d, unit)))
    return spectrum_of_theta(ThetaVector(ext.unflatten(flat)))
