"""Golden-value corpus: known states with their expected entanglement."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

from .measure import entanglement
from .parsing import parse_state

CORPUS_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CorpusEntry:
    expr: str
    expected_E: float
    dim: int | None = None
    source: str = ""

    def __post_init__(self):
        if not math.isfinite(self.expected_E):
            raise ValueError(f"expected_E must be finite, got {self.expected_E}")


@dataclass(frozen=True)
class CorpusVerdict:
    entry: CorpusEntry
    computed: float | None
    diff: float | None
    passed: bool
    error: str | None = None


BUILTIN_CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("1/sqrt(2)|01> + 1/sqrt(2)|10>", 1.0, None, "two-qubit Bell state"),
    CorpusEntry("1/2|00> + 1/2|01> + 1/2|10> + 1/2|11>", 0.0, None, "two-qubit plus-plus product state"),
    CorpusEntry("1/2|00> + sqrt(3)/2|11>", 0.5, None, "unequal two-qubit superposition"),
    CorpusEntry("1/sqrt(5)|011> + 2/sqrt(5)|100>", 0.4, None, "three-qubit state"),
    CorpusEntry("1/2|02> + sqrt(3)/2|20>", 1.0, 3, "qutrit pair, levels 0 and 2"),
    CorpusEntry("1/2|01> + sqrt(3)/2|20>", 1.0, 3, "qutrit pair, mixed levels"),
    CorpusEntry("1/sqrt(3)|00> + 1/sqrt(3)|11> + 1/sqrt(3)|22>", 2.0, 3, "qutrit GHZ"),
    CorpusEntry("1/sqrt(3)|00> + 1/sqrt(2)|11> + 1/sqrt(6)|20>", 1.75, 3, "qutrit pair, repeated eigenvalue"),
    CorpusEntry("1/sqrt(5)|01> + 2/sqrt(5)|10>", 1.2, 4, "d=4 pair, levels 0 and 1"),
    CorpusEntry("1/sqrt(5)|03> + 2/sqrt(5)|30>", 1.2, 4, "d=4 pair, levels 0 and 3"),
    CorpusEntry("1/sqrt(5)|12> + 2/sqrt(5)|21>", 1.2, 4, "d=4 pair, levels 1 and 2"),
)


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    """Read a JSON-lines corpus; blank lines are skipped."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                entries.append(
                    CorpusEntry(
                        expr=obj["expr"],
                        expected_E=float(obj["expected_E"]),
                        dim=obj.get("dim"),
                        source=obj.get("source", ""),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno}: bad corpus entry: {exc}") from exc
    return entries


def dump_corpus(entries: Iterable[CorpusEntry], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps(asdict(e)) + "\n")


def _verify_one(entry: CorpusEntry, method: str, tolerance: float, grid_options: dict) -> CorpusVerdict:
    try:
        report = entanglement(parse_state(entry.expr, entry.dim), method, **grid_options)
    except Exception as exc:  # failures are rows, not exceptions
        return CorpusVerdict(entry, None, None, False, f"{type(exc).__name__}: {exc}")
    diff = abs(report.E - entry.expected_E)
    return CorpusVerdict(entry, report.E, diff, diff <= tolerance)


def corpus_verify(
    entries: Iterable[CorpusEntry],
    method: str = "analytic",
    tolerance: float = CORPUS_TOLERANCE,
    **grid_options,
) -> list[CorpusVerdict]:
    """Evaluate every entry and compare against its expected ``E``.

    Entries run on a thread pool; verdicts come back in input order.
    """
    entries = list(entries)
    if not entries:
        return []
    with ThreadPoolExecutor() as pool:
        return list(pool.map(lambda e: _verify_one(e, method, tolerance, grid_options), entries))
