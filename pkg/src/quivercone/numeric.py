"""Floating-point checks: sampling, the momentum map, spectra, chain solutions."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, Tolerances
from .cone import Spectrum, emit_inequalities
from .quiver import DomainError, Quiver, euler_form

FIELDS = ("complex", "real")


@dataclass(frozen=True)
class Representation:
    """One ``d_target x d_source`` matrix per arrow, in arrow order."""

    field: str
    matrices: tuple[np.ndarray, ...]

    def check(self, q: Quiver, d: Sequence[int]) -> None:
        if len(self.matrices) != len(q.arrows):
            raise DomainError(f"{len(self.matrices)} matrices for {len(q.arrows)} arrows")
        for (s, t), f in zip(q.arrow_indices, self.matrices):
            if f.shape != (d[t], d[s]):
                raise DomainError(
                    f"matrix of shape {f.shape} on an arrow needing {(d[t], d[s])}"
                )


@dataclass(frozen=True)
class HermitianTuple:
    operators: tuple[np.ndarray, ...]

    def check(self, tol: float = DEFAULT.hermitian) -> None:
        for h in self.operators:
            scale = max(np.linalg.norm(h), 1.0)
            if np.linalg.norm(h - h.conj().T) > tol * scale:
                raise DomainError("operator is not Hermitian within tolerance")


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _gaussian(rng: np.random.Generator, shape, field: str) -> np.ndarray:
    if field == "complex":
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    if field == "real":
        return rng.standard_normal(shape)
    raise DomainError(f"unknown field {field!r}")


def sample_batch(q: Quiver, d, field: str, n: int, seed) -> list[np.ndarray]:
    """``n`` Gaussian representations, stacked: one ``(n, d_t, d_s)`` array per arrow."""
    d = q.dim(d)
    rng = _rng(seed)
    return [_gaussian(rng, (n, d[t], d[s]), field) for s, t in q.arrow_indices]


def sample_representation(q: Quiver, d, field: str = "complex", seed=0) -> Representation:
    mats = sample_batch(q, d, field, 1, seed)
    return Representation(field, tuple(m[0] for m in mats))


def moment_map_batch(q: Quiver, d, matrices: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Stacked momentum map: ``sum_in f f* - sum_out f* f`` at each vertex."""
    d = q.dim(d)
    n = matrices[0].shape[0] if matrices else 1
    dtype = np.result_type(*matrices) if matrices else float
    out = [np.zeros((n, x, x), dtype=dtype) for x in d]
    for (s, t), f in zip(q.arrow_indices, matrices):
        fh = np.conj(np.swapaxes(f, 1, 2))
        out[t] += f @ fh
        out[s] -= fh @ f
    return [(m + np.conj(np.swapaxes(m, 1, 2))) / 2 for m in out]


def moment_map(q: Quiver, d, rep: Representation) -> HermitianTuple:
    d = q.dim(d)
    rep.check(q, d)
    if not rep.matrices:
        return HermitianTuple(tuple(np.zeros((x, x)) for x in d))
    stacked = moment_map_batch(q, d, [f[None] for f in rep.matrices])
    return HermitianTuple(tuple(m[0] for m in stacked))


def jacobi_eigenvalues(
    a: np.ndarray, tol: float = DEFAULT.jacobi_offdiag, max_sweeps: int = 100
) -> np.ndarray:
    """Sorted eigenvalues of Hermitian matrices by cyclic Jacobi rotations.

    Accepts one ``(n, n)`` matrix or a stack ``(N, n, n)``; complex and real
    inputs share the same code path.
    """
    single = a.ndim == 2
    a = np.array(a[None] if single else a, copy=True)
    if not np.iscomplexobj(a):
        a = a.astype(float)
    n = a.shape[-1]
    scale = np.linalg.norm(a, axis=(1, 2))
    diag = np.arange(n)
    for _ in range(max_sweeps):
        off = np.sqrt(
            np.maximum(scale**2 - np.sum(np.abs(a[:, diag, diag]) ** 2, axis=1), 0.0)
        )
        if np.all(off <= tol * scale):
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[:, p, r]
                mag = np.abs(apr)
                active = mag > 1e-300
                if not active.any():
                    continue
                safe = np.where(active, mag, 1.0)
                phase = np.where(active, np.conj(apr) / safe, 1.0)
                tau = (a[:, r, r].real - a[:, p, p].real) / (2.0 * safe)
                sgn = np.where(tau >= 0, 1.0, -1.0)
                t = np.where(active, sgn / (np.abs(tau) + np.hypot(1.0, tau)), 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # U = diag(1, phase) @ [[c, s], [-s, c]] on the (p, r) plane
                upp, upr = c[:, None], s[:, None]
                urp, urr = (-s * phase)[:, None], (c * phase)[:, None]
                colp, colr = a[:, :, p].copy(), a[:, :, r].copy()
                a[:, :, p] = colp * upp + colr * urp
                a[:, :, r] = colp * upr + colr * urr
                rowp, rowr = a[:, p, :].copy(), a[:, r, :].copy()
                a[:, p, :] = np.conj(upp) * rowp + np.conj(urp) * rowr
                a[:, r, :] = np.conj(upr) * rowp + np.conj(urr) * rowr
                a[active, p, r] = 0.0
                a[active, r, p] = 0.0
        # rotations preserve the Frobenius norm; refresh against drift
        scale = np.linalg.norm(a, axis=(1, 2))
    vals = np.sort(a[:, diag, diag].real, axis=1)
    return vals[0] if single else vals


def eigenvalues(h: HermitianTuple, tolerances: Tolerances = DEFAULT) -> Spectrum:
    h.check(tolerances.hermitian)
    return Spectrum(
        tuple(
            tuple(float(x) for x in jacobi_eigenvalues(m, tolerances.jacobi_offdiag))
            for m in h.operators
        )
    )


@dataclass(frozen=True)
class ChainSolution:
    eigenvalues: tuple[float, ...]
    matrices: tuple[np.ndarray, ...]
    thetas: tuple[float, ...]


def chain_construct(a: Sequence[float]) -> ChainSolution:
    """Explicit solution with ``B = diag(a)``: ``(A_i)_{jj} = sqrt(a_{i+1} - a_j)``."""
    a = tuple(float(x) for x in a)
    if any(x > y for x, y in zip(a, a[1:])):
        raise DomainError(f"spectrum {a} is not weakly increasing")
    n = len(a)
    thetas = tuple(a[k] - a[k + 1] for k in range(n - 1)) + a[-1:]
    mats = []
    for i in range(1, n):
        m = np.zeros((i + 1, i))
        for j in range(1, i + 1):
            m[j - 1, j - 1] = np.sqrt(a[i] - a[j - 1])
        mats.append(m)
    return ChainSolution(a, tuple(mats), thetas)


def verify_chain(sol: ChainSolution, b: np.ndarray) -> list[float]:
    """Frobenius residual of each of the ``n`` chain equations."""
    n = len(sol.thetas)
    mats = sol.matrices
    out = []
    for k in range(1, n + 1):
        lhs = np.zeros((k, k), dtype=np.result_type(b, *mats) if mats else b.dtype)
        if k >= 2:
            m = mats[k - 2]
            lhs = lhs + m @ m.conj().T
        if k <= n - 1:
            m = mats[k - 1]
            lhs = lhs - m.conj().T @ m
        if k == n:
            lhs = lhs + b
        out.append(float(np.linalg.norm(lhs - sol.thetas[k - 1] * np.eye(k))))
    return out


def chain_matrix(sol: ChainSolution) -> np.ndarray:
    """``B = theta_n E_n - A_{n-1} A_{n-1}*``, read off the last chain equation."""
    n = len(sol.thetas)
    b = sol.thetas[-1] * np.eye(n)
    if sol.matrices:
        m = sol.matrices[-1]
        b = b - m @ m.conj().T
    return b


def random_unitary(n: int, seed, field: str = "complex") -> np.ndarray:
    """Q factor of a Gaussian matrix, phases fixed so the law is Haar."""
    rng = _rng(seed)
    z = _gaussian(rng, (n, n), field)
    qm, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.where(np.abs(np.diagonal(r)) > 0, np.abs(np.diagonal(r)), 1)
    return qm * ph


def hermitian_with_spectrum(a: Sequence[float], seed, field: str = "complex") -> np.ndarray:
    u = random_unitary(len(a), seed, field)
    h = u @ np.diag(np.asarray(a, dtype=float)) @ u.conj().T
    return (h + h.conj().T) / 2


def hom_dimension(
    q: Quiver, dv, v: Sequence[np.ndarray], dw, w: Sequence[np.ndarray],
    rank_tol: float = DEFAULT.rank,
) -> int:
    """``dim Hom(V, W)``: kernel of ``(phi_i) -> (phi_t f - g phi_s)`` over the arrows."""
    dv, dw = q.dim(dv), q.dim(dw)
    offsets = np.cumsum([0] + [dw[i] * dv[i] for i in range(len(dv))])
    unknowns = int(offsets[-1])
    if unknowns == 0:
        return 0
    blocks = []
    for (s, t), f, g in zip(q.arrow_indices, v, w):
        rows = dw[t] * dv[s]
        if rows == 0:
            continue
        block = np.zeros((rows, unknowns), dtype=complex)
        # column-major vec: vec(X f) = (f^T ⊗ I) vec X, vec(g X) = (I ⊗ g) vec X
        block[:, offsets[t]:offsets[t + 1]] += np.kron(f.T, np.eye(dw[t]))
        block[:, offsets[s]:offsets[s + 1]] -= np.kron(np.eye(dv[s]), g)
        blocks.append(block)
    if not blocks:
        return unknowns
    m = np.vstack(blocks)
    sv = np.linalg.svd(m, compute_uv=False)
    rank = int(np.sum(sv > rank_tol * sv[0])) if sv.size and sv[0] > 0 else 0
    return unknowns - rank


def sampled_ext(q: Quiver, d, e, pairs: int = 50, seed=0, field: str = "complex") -> int:
    """Minimum of ``dim Ext^1(V, W)`` over random pairs of dimensions ``d``, ``e``."""
    d, e = q.dim(d), q.dim(e)
    rng = _rng(seed)
    chi = euler_form(q, d, e)
    best = None
    for _ in range(pairs):
        v = [_gaussian(rng, (d[t], d[s]), field) for s, t in q.arrow_indices]
        w = [_gaussian(rng, (e[t], e[s]), field) for s, t in q.arrow_indices]
        ext = hom_dimension(q, d, v, e, w) - chi
        best = ext if best is None else min(best, ext)
    return best


@dataclass
class NecessityReport:
    field: str
    seed: int
    samples: int
    min_slack: float
    min_slack_per_inequality: list[float]
    max_abs_trace: float
    passed: bool
    tolerances: Tolerances = field(default=DEFAULT)

    def lines(self, q: Quiver, tuples) -> list[str]:
        out = [
            f"field={self.field}",
            f"seed={self.seed}",
            f"samples={self.samples}",
            f"min_slack={self.min_slack:.6e}",
            f"max_abs_trace={self.max_abs_trace:.6e}",
        ]
        for k, v in zip(tuples, self.min_slack_per_inequality):
            out.append(f"slack[{k.render(q.vertices)}]={v:.6e}")
        out.extend(f"tol.{k}={v:g}" for k, v in self.tolerances.items())
        out.append(f"result={'pass' if self.passed else 'fail'}")
        return out


def spectra_batch(q: Quiver, d, matrices: Sequence[np.ndarray], tol: float) -> np.ndarray:
    """Stacked spectra in cone coordinate order (vertex order, ``k`` ascending)."""
    ops = moment_map_batch(q, d, matrices)
    n = matrices[0].shape[0]
    parts = [jacobi_eigenvalues(m, tol) if m.shape[-1] else np.zeros((n, 0)) for m in ops]
    return np.concatenate(parts, axis=1)


def necessity_oracle(
    q: Quiver, d, n_samples: int, field: str = "complex", seed: int = 0,
    tolerances: Tolerances = DEFAULT,
) -> NecessityReport:
    """Sample representations and check their spectra against the cone."""
    d = q.dim(d)
    cone = emit_inequalities(q, d)
    rows = np.array(cone.rows, dtype=float).reshape(len(cone.tuples), sum(d))
    if n_samples == 0 or not q.arrows or sum(d) == 0:
        spectra = np.zeros((max(n_samples, 0), sum(d)))
    else:
        spectra = spectra_batch(
            q, d, sample_batch(q, d, field, n_samples, seed), tolerances.jacobi_offdiag
        )
    slack = spectra @ rows.T
    per = slack.min(axis=0).tolist() if n_samples else [0.0] * len(cone.tuples)
    min_slack = min(per, default=0.0)
    max_trace = float(np.abs(spectra.sum(axis=1)).max()) if n_samples else 0.0
    passed = (
        min_slack >= -tolerances.membership_slack
        and max_trace <= tolerances.membership_slack * max(sum(d), 1)
    )
    return NecessityReport(
        field, seed, n_samples, float(min_slack), per, max_trace, passed, tolerances
    )


def subspace_pair_construct(b1, b2, lam1, lam2) -> tuple[np.ndarray, np.ndarray]:
    """Vectors ``v1, v2`` of lengths ``lam1, lam2`` with ``v1 v1* + v2 v2*`` of spectrum ``(b1, b2)``.

    ``v1`` lies on the first axis; the angle of ``v2`` matches the determinant.
    """
    b1, b2, lam1, lam2 = map(float, (b1, b2, lam1, lam2))
    denom = lam1**2 * lam2**2
    sin2 = 0.0 if denom == 0 else min(max(b1 * b2 / denom, 0.0), 1.0)
    sin = np.sqrt(sin2)
    cos = np.sqrt(1.0 - sin2)
    return np.array([lam1, 0.0]), lam2 * np.array([cos, sin])
