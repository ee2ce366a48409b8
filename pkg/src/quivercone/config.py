from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-10
    membership_slack: float = 1e-8
    chain_residual: float = 1e-9
    rank: float = 1e-8
    jacobi_offdiag: float = 1e-12
    spectrum_compare: float = 1e-9

    def items(self):
        return asdict(self).items()

    @classmethod
    def from_file(cls, path: str | Path) -> Tolerances:
        """Read overrides from a JSON object; unknown keys are an error."""
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown tolerance keys: {sorted(unknown)}")
        return replace(cls(), **{k: float(v) for k, v in data.items()})


DEFAULT = Tolerances()
