"""Text formats: quiver files and spectrum files."""

from __future__ import annotations

from pathlib import Path

from .cone import Spectrum, _exact
from .quiver import DimVec, DomainError, Quiver


class InputError(ValueError):
    """Malformed input file; the message carries the line number."""


def parse_quiver(text: str, source: str = "<quiver>") -> tuple[Quiver, DimVec]:
    """Parse ``vertex``/``arrow``/``dim`` lines; vertices without ``dim`` get 0."""
    vertices: list[str] = []
    arrows: list[tuple[str, str]] = []
    dims: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        where = f"{source}:{lineno}"
        kind = words[0]
        if kind == "vertex" and len(words) == 2:
            if words[1] in vertices:
                raise InputError(f"{where}: duplicate vertex {words[1]!r}")
            vertices.append(words[1])
        elif kind == "arrow" and len(words) == 3:
            for w in words[1:]:
                if w not in vertices:
                    raise InputError(f"{where}: undeclared vertex {w!r}")
            arrows.append((words[1], words[2]))
        elif kind == "dim" and len(words) == 3:
            if words[1] not in vertices:
                raise InputError(f"{where}: undeclared vertex {words[1]!r}")
            try:
                value = int(words[2])
            except ValueError:
                raise InputError(f"{where}: dimension {words[2]!r} is not an integer")
            if value < 0:
                raise InputError(f"{where}: negative dimension")
            dims[words[1]] = value
        else:
            raise InputError(f"{where}: cannot parse {raw.strip()!r}")
    q = Quiver(tuple(vertices), tuple(arrows))
    return q, tuple(dims.get(v, 0) for v in vertices)


def read_quiver(path: str | Path) -> tuple[Quiver, DimVec]:
    path = Path(path)
    return parse_quiver(path.read_text(), str(path))


def format_quiver(q: Quiver, d) -> str:
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {s} {t}" for s, t in q.arrows]
    lines += [f"dim {v} {x}" for v, x in zip(q.vertices, q.dim(d))]
    return "\n".join(lines) + "\n"


def parse_spectrum(text: str, q: Quiver, source: str = "<spectrum>") -> Spectrum:
    """``<vertex>: a1 a2 ...`` per line; numbers are read exactly (``0.1`` is 1/10)."""
    values: dict[str, list] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or name not in q.vertices:
            raise InputError(f"{where}: expected '<vertex>: a1 a2 ...'")
        if name in values:
            raise InputError(f"{where}: vertex {name!r} given twice")
        try:
            values[name] = [_exact(w) for w in rest.split()]
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{where}: bad number in {rest.strip()!r}")
    try:
        return Spectrum.from_mapping(q, values)
    except DomainError as exc:
        raise InputError(f"{source}: {exc}")
