"""Fusion tables: multiplicities N_{ij}^k on an ordered list of simple labels."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence


@dataclass(frozen=True)
class FusionTable:
    simples: tuple[Hashable, ...]
    mult: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mult", {k: v for k, v in sorted(self.mult.items()) if v})
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.simples)})
        rows: dict[tuple[int, int], dict[int, int]] = {}
        for (i, j, k), n in self.mult.items():
            rows.setdefault((i, j), {})[k] = n
        object.__setattr__(self, "_rows", rows)

    def __len__(self):
        return len(self.simples)

    def index(self, label) -> int:
        return self._index[label]

    def N(self, i: int, j: int, k: int) -> int:
        return self.mult.get((i, j, k), 0)

    def product(self, a, b) -> dict:
        """a x b as {label: multiplicity}, by label."""
        return {self.simples[k]: n for k, n in self.row(self.index(a), self.index(b)).items()}

    def row(self, i: int, j: int) -> dict[int, int]:
        return dict(self._rows.get((i, j), {}))

    def __eq__(self, other):
        return isinstance(other, FusionTable) and self.simples == other.simples and self.mult == other.mult

    # -- structural checks; each returns a list of violations ------------

    def unit_violations(self, unit: int = 0) -> list[str]:
        n = len(self)
        out = []
        for j in range(n):
            for k in range(n):
                if self.N(unit, j, k) != int(j == k):
                    out.append(f"N[{unit},{j}]^{k} = {self.N(unit, j, k)}")
                if self.N(j, unit, k) != int(j == k):
                    out.append(f"N[{j},{unit}]^{k} = {self.N(j, unit, k)}")
        return out

    def symmetry_violations(self) -> list[str]:
        return [
            f"N[{i},{j}]^{k} != N[{j},{i}]^{k}"
            for (i, j, k) in self.mult if self.N(j, i, k) != self.mult[(i, j, k)]
        ]

    def associativity_violations(self) -> list[str]:
        n = len(self)
        rows = {(i, j): self.row(i, j) for i in range(n) for j in range(n)}
        bad = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left: dict[int, int] = {}
                    for m, a in rows[(i, j)].items():
                        for l, b in rows[(m, k)].items():
                            left[l] = left.get(l, 0) + a * b
                    right: dict[int, int] = {}
                    for m, a in rows[(j, k)].items():
                        for l, b in rows[(i, m)].items():
                            right[l] = right.get(l, 0) + a * b
                    if left != right:
                        bad.append(f"({i} x {j}) x {k} != {i} x ({j} x {k})")
        return bad

    # -- serialization ---------------------------------------------------

    def to_json(self, render: Callable[[Any], Any], **header) -> dict:
        return {
            **header,
            "simples": [render(s) for s in self.simples],
            "entries": [[i, j, k, n] for (i, j, k), n in self.mult.items()],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "k", "N"])
        for (i, j, k), n in self.mult.items():
            writer.writerow([i, j, k, n])
        return buf.getvalue()

    def to_text(self, render: Callable[[Any], str] = str) -> str:
        names = [render(s) for s in self.simples]
        width = max(len(x) for x in names)
        lines = []
        for i, a in enumerate(names):
            for j, b in enumerate(names):
                terms = [
                    (f"{n}*" if n > 1 else "") + names[k] for k, n in sorted(self.row(i, j).items())
                ]
                lines.append(f"{a:>{width}} x {b:<{width}} = {' + '.join(terms) if terms else '0'}")
        return "\n".join(lines)


def from_rows(simples: Sequence, rows: dict[tuple[int, int], dict[int, int]]) -> FusionTable:
    return FusionTable(tuple(simples), {(i, j, k): n for (i, j), r in rows.items() for k, n in r.items()})
