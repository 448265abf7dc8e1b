"""Word codebook: the mapping from vocabulary words to their IT2 models.

The shipped default codebook carries one trapezoidal footprint per word
of the default schema plus the centroid values it was published with;
stored centroids are retained purely for verification and never feed the
computation.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .errors import CodebookError
from .it2 import (DEFAULT_GRID, CentroidInterval, DiscretizationGrid,
                  TrapezoidIT2, centroid)
from .vocabulary import LinguisticTerm, ParameterSchema, build_default_schema

CODEBOOK_HEADER = (
    "parameter", "label", "code",
    "a", "b", "c", "d", "e", "f", "g", "i", "h",
    "c_l", "c_r", "mean",
)

DEFAULT_DOMAIN = (0.0, 10.0)

_MEAN_TOL = 0.01


@dataclass(frozen=True)
class StoredCentroid:
    """Centroid values a codebook row was shipped with."""

    c_l: float
    c_r: float
    mean: float

    def __post_init__(self):
        if abs(self.mean - 0.5 * (self.c_l + self.c_r)) > _MEAN_TOL:
            raise ValueError(
                f"stored mean {self.mean} is not the midpoint of "
                f"[{self.c_l}, {self.c_r}]"
            )


@dataclass(frozen=True)
class CodebookEntry:
    parameter: str
    term: LinguisticTerm
    fou: TrapezoidIT2
    stored: StoredCentroid | None = None


class Codebook:
    """Immutable word-to-FOU map covering every word of a schema."""

    def __init__(self, schema: ParameterSchema, entries: Iterable[CodebookEntry],
                 domain: tuple[float, float] = DEFAULT_DOMAIN):
        self.schema = schema
        self.entries = tuple(entries)
        self.domain = (float(domain[0]), float(domain[1]))
        self.flags: tuple[str, ...] = ()
        if self.domain != DEFAULT_DOMAIN:
            self.flags = (f"nonstandard domain scale {self.domain}",)
        self._by_key = {}
        for entry in self.entries:
            key = (entry.parameter.lower(), entry.term.code.lower())
            if key in self._by_key:
                raise CodebookError(
                    f"duplicate entry for ({entry.parameter!r}, {entry.term.code!r})"
                )
            self._by_key[key] = entry
        self._check_complete()

    def _check_complete(self):
        term_sets = list(self.schema.parameters) + [self.schema.recommendation]
        for ts in term_sets:
            for term in ts:
                if (ts.name.lower(), term.code.lower()) not in self._by_key:
                    raise CodebookError(
                        f"codebook is missing word {term.label!r} ({term.code}) "
                        f"of {ts.name!r}"
                    )
        expected = sum(len(ts) for ts in term_sets)
        if len(self.entries) != expected:
            raise CodebookError(
                f"codebook has {len(self.entries)} entries, schema needs {expected}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, Codebook)
            and self.schema == other.schema
            and self.entries == other.entries
            and self.domain == other.domain
        )

    def _term_set(self, parameter: str):
        for ts in list(self.schema.parameters) + [self.schema.recommendation]:
            if ts.name.lower() == parameter.lower():
                return ts
        raise CodebookError(f"unknown parameter {parameter!r}")

    def entry(self, parameter: str, word: str) -> CodebookEntry:
        ts = self._term_set(parameter)
        try:
            term = ts.find(word)
        except Exception:
            raise CodebookError(
                f"no codebook entry for word {word!r} under {parameter!r}"
            ) from None
        return self._by_key[(ts.name.lower(), term.code.lower())]

    def lookup(self, parameter: str, word: str) -> TrapezoidIT2:
        return self.entry(parameter, word).fou

    def recommendation_fous(self) -> tuple[TrapezoidIT2, ...]:
        """Word models of the recommendation set, in index order."""
        ts = self.schema.recommendation
        return tuple(self.lookup(ts.name, term.code) for term in ts)


def load_codebook(path, schema: ParameterSchema | None = None,
                  domain: tuple[float, float] = DEFAULT_DOMAIN) -> Codebook:
    """Parse and validate a codebook file.

    Raises CodebookError with the offending row number for malformed
    rows, with the word name for invariant violations, and for schema
    words without an entry.
    """
    schema = schema or build_default_schema()
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return _parse_codebook(handle, schema, domain, source=str(path))


def loads_codebook(text: str, schema: ParameterSchema | None = None,
                   domain: tuple[float, float] = DEFAULT_DOMAIN) -> Codebook:
    schema = schema or build_default_schema()
    return _parse_codebook(io.StringIO(text), schema, domain, source="<string>")


def _parse_codebook(handle, schema, domain, source) -> Codebook:
    reader = csv.reader(handle)
    try:
        header = next(reader)
    except StopIteration:
        raise CodebookError(f"{source}: empty codebook file") from None
    if tuple(header) != CODEBOOK_HEADER:
        raise CodebookError(
            f"{source}: expected header {','.join(CODEBOOK_HEADER)}, "
            f"got {','.join(header)}"
        )
    entries = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CODEBOOK_HEADER):
            raise CodebookError(
                f"{source}:{lineno}: expected {len(CODEBOOK_HEADER)} cells, got {len(row)}"
            )
        parameter, label, code = (cell.strip() for cell in row[:3])
        try:
            ts = next(
                t for t in list(schema.parameters) + [schema.recommendation]
                if t.name.lower() == parameter.lower()
            )
        except StopIteration:
            raise CodebookError(
                f"{source}:{lineno}: unknown parameter {parameter!r}"
            ) from None
        try:
            term = ts.find(code)
        except Exception:
            raise CodebookError(
                f"{source}:{lineno}: word {label!r} ({code}) is not in {ts.name!r}"
            ) from None
        try:
            numbers = [float(cell) for cell in row[3:12]]
        except ValueError:
            raise CodebookError(f"{source}:{lineno}: malformed numeric cell") from None
        try:
            fou = TrapezoidIT2(*numbers)
        except ValueError as exc:
            raise CodebookError(f"{source}:{lineno}: word {label!r}: {exc}") from None
        stored_cells = [cell.strip() for cell in row[12:15]]
        stored = None
        if any(stored_cells):
            if not all(stored_cells):
                raise CodebookError(
                    f"{source}:{lineno}: partial stored centroid for {label!r}"
                )
            try:
                stored = StoredCentroid(*(float(cell) for cell in stored_cells))
            except ValueError as exc:
                raise CodebookError(f"{source}:{lineno}: word {label!r}: {exc}") from None
        entries.append(CodebookEntry(ts.name, term, fou, stored))
    return Codebook(schema, entries, domain)


def dumps_codebook(cb: Codebook) -> str:
    """Serialize a codebook; load(dumps(load(x))) equals load(x)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CODEBOOK_HEADER)
    for entry in cb.entries:
        fou = entry.fou
        row = [entry.parameter, entry.term.label, entry.term.code,
               repr(fou.umf_a), repr(fou.umf_b), repr(fou.umf_c), repr(fou.umf_d),
               repr(fou.lmf_e), repr(fou.lmf_f), repr(fou.lmf_g), repr(fou.lmf_i),
               repr(fou.lmf_height)]
        if entry.stored is not None:
            row += [repr(entry.stored.c_l), repr(entry.stored.c_r), repr(entry.stored.mean)]
        else:
            row += ["", "", ""]
        writer.writerow(row)
    return buf.getvalue()


def dump_codebook(cb: Codebook, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(dumps_codebook(cb))


@lru_cache(maxsize=1)
def default_codebook() -> Codebook:
    """The codebook shipped with the package."""
    text = resources.files("cwwkit.data").joinpath("codebook_default.csv").read_text("utf-8")
    return loads_codebook(text)


def default_feedback_path():
    """Path of the 25-student feedback batch shipped with the package."""
    return resources.files("cwwkit.data").joinpath("feedback_sample.csv")


@dataclass(frozen=True)
class CentroidCheck:
    """Recomputed-versus-stored centroid comparison for one word."""

    parameter: str
    code: str
    recomputed: CentroidInterval
    stored: StoredCentroid | None
    tolerance: float

    @property
    def delta_c_l(self) -> float | None:
        if self.stored is None:
            return None
        return abs(self.recomputed.c_l - self.stored.c_l)

    @property
    def delta_c_r(self) -> float | None:
        if self.stored is None:
            return None
        return abs(self.recomputed.c_r - self.stored.c_r)

    @property
    def passed(self) -> bool:
        if self.stored is None:
            return True
        return self.delta_c_l <= self.tolerance and self.delta_c_r <= self.tolerance


@dataclass(frozen=True)
class CentroidVerification:
    checks: tuple[CentroidCheck, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def format_text(self) -> str:
        lines = [
            f"codebook centroid verification (tolerance {self.tolerance:g})",
            f"{'parameter':34s} {'word':6s} {'recomputed':>19s} "
            f"{'stored':>17s} {'d_cl':>7s} {'d_cr':>7s} status",
        ]
        for ch in self.checks:
            rec = f"[{ch.recomputed.c_l:7.4f},{ch.recomputed.c_r:8.4f}]"
            if ch.stored is None:
                lines.append(
                    f"{ch.parameter:34s} {ch.code:6s} {rec:>19s} "
                    f"{'(none)':>17s} {'-':>7s} {'-':>7s} no stored centroid"
                )
            else:
                sto = f"[{ch.stored.c_l:6.2f}, {ch.stored.c_r:6.2f}]"
                status = "ok" if ch.passed else "FAIL"
                lines.append(
                    f"{ch.parameter:34s} {ch.code:6s} {rec:>19s} "
                    f"{sto:>17s} {ch.delta_c_l:7.4f} {ch.delta_c_r:7.4f} {status}"
                )
        lines.append("result: " + ("all entries pass" if self.passed else "FAILED"))
        return "\n".join(lines)


def verify_stored_centroids(cb: Codebook, grid: DiscretizationGrid = DEFAULT_GRID,
                            tolerance: float = 0.05) -> CentroidVerification:
    """Recompute every entry's centroid and compare with the stored values."""
    checks = tuple(
        CentroidCheck(
            parameter=entry.parameter,
            code=entry.term.code,
            recomputed=centroid(entry.fou, grid),
            stored=entry.stored,
            tolerance=tolerance,
        )
        for entry in cb.entries
    )
    return CentroidVerification(checks=checks, tolerance=tolerance)
