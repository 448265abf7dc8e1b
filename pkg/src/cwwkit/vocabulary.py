"""Linguistic vocabulary: parameters, term sets and feedback records.

The default schema covers the four assessment parameters (time taken,
subject knowledge, liking, perceived preparation) plus the recommendation
set, each with five ordered terms. All values are immutable after
construction and safe to share across concurrent evaluations.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Sequence

from .errors import SchemaError, WordResolutionError

TIME_TAKEN = "Time taken to solve the question"
SUBJECT_KNOWLEDGE = "Subject's Knowledge"
LIKING = "Liking towards Subject"
PREPARATION = "Perceived preparation level"
RECOMMENDATION = "Strategy of student"

# Column layout of a feedback batch file, aligned with the parameter order.
FEEDBACK_COLUMNS = ("time_taken", "subject_knowledge", "liking", "preparation")
FEEDBACK_HEADER = ("student_id",) + FEEDBACK_COLUMNS


class Method(str, Enum):
    """The four evaluation methods the engine implements."""

    EXTENSION_PRINCIPLE = "extension_principle"
    SYMBOLIC = "symbolic"
    TWO_TUPLE = "two_tuple"
    PERCEPTUAL = "perceptual"


@dataclass(frozen=True)
class LinguisticTerm:
    """One word of a term set, e.g. label 'Small' with code 'S' at index 1."""

    label: str
    code: str
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"term index must be >= 0, got {self.index}")


@dataclass(frozen=True)
class TermSet:
    """Ordered vocabulary for one parameter; indices run 0..g without gaps."""

    name: str
    terms: tuple[LinguisticTerm, ...]

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError(f"term set {self.name!r} needs at least 2 terms")
        for position, term in enumerate(self.terms):
            if term.index != position:
                raise ValueError(
                    f"term set {self.name!r}: term {term.code!r} has index "
                    f"{term.index}, expected {position}"
                )
        labels = [t.label.lower() for t in self.terms]
        codes = [t.code.lower() for t in self.terms]
        if len(set(labels)) != len(labels) or len(set(codes)) != len(codes):
            raise ValueError(f"term set {self.name!r} has duplicate labels or codes")

    @property
    def g(self) -> int:
        """Largest term index; cardinality is g + 1."""
        return len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[LinguisticTerm]:
        return iter(self.terms)

    def __getitem__(self, index: int) -> LinguisticTerm:
        return self.terms[index]

    def find(self, word: str) -> LinguisticTerm:
        """Resolve a word against label or code, case-insensitively."""
        needle = word.strip().lower()
        for term in self.terms:
            if needle == term.label.lower() or needle == term.code.lower():
                return term
        raise WordResolutionError(self.name, word)


@dataclass(frozen=True)
class ParameterSchema:
    """The evaluated parameters plus the recommendation term set."""

    parameters: tuple[TermSet, ...]
    recommendation: TermSet

    def __post_init__(self):
        names = [p.name.lower() for p in self.parameters]
        if len(set(names)) != len(names):
            raise ValueError("parameter names must be unique")

    def parameter(self, name: str) -> TermSet:
        for p in self.parameters:
            if p.name.lower() == name.lower():
                return p
        raise SchemaError(f"unknown parameter {name!r}")


@dataclass(frozen=True)
class RawFeedback:
    """Unresolved feedback: one word of free text per parameter name."""

    student_id: str
    words: Mapping[str, str]


@dataclass(frozen=True)
class FeedbackRecord:
    """Feedback resolved against a schema: one term per parameter, in order."""

    student_id: str
    choices: tuple[LinguisticTerm, ...]

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.choices)

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(c.code for c in self.choices)


@dataclass(frozen=True)
class Recommendation:
    """Per-method evaluation outcome: a numeric payload plus a word.

    The numeric payload is method specific: the matched triangular tuple
    for the extension principle, an integer index for the symbolic method,
    the aggregated mean for the 2-tuple method and the centroid mean
    rounded to two decimals for perceptual computing. Full-precision
    intermediates are kept in `details`.
    """

    method: Method
    numeric: object
    linguistic: LinguisticTerm
    details: Mapping[str, object] = field(default_factory=dict)


def build_default_schema() -> ParameterSchema:
    """Return the built-in five-term vocabulary for all five term sets."""

    def term_set(name, words):
        terms = tuple(
            LinguisticTerm(label, code, i) for i, (label, code) in enumerate(words)
        )
        return TermSet(name, terms)

    return ParameterSchema(
        parameters=(
            term_set(TIME_TAKEN, [
                ("Very little", "VL"),
                ("Small", "S"),
                ("Moderate", "M"),
                ("Large", "L"),
                ("Very Large", "VLA"),
            ]),
            term_set(SUBJECT_KNOWLEDGE, [
                ("Very Limited", "SVL"),
                ("Limited", "SL"),
                ("Moderate", "SM"),
                ("Large", "SLA"),
                ("Very Large", "SVLA"),
            ]),
            term_set(LIKING, [
                ("Very Less", "AVL"),
                ("Less", "AL"),
                ("Moderate", "AM"),
                ("High", "AH"),
                ("Very High", "AVH"),
            ]),
            term_set(PREPARATION, [
                ("Very Less", "PVL"),
                ("Less", "PL"),
                ("Moderate", "PM"),
                ("High", "PH"),
                ("Very High", "PVH"),
            ]),
        ),
        recommendation=term_set(RECOMMENDATION, [
            ("Not Good", "SSNG"),
            ("Below Average", "SSBA"),
            ("Average", "SSA"),
            ("Good", "SSG"),
            ("Very Good", "SSVG"),
        ]),
    )


def resolve_feedback(
    schema: ParameterSchema,
    raw: Mapping[str, str],
    student_id: str = "",
) -> FeedbackRecord:
    """Resolve one word per parameter, matching labels or codes.

    Raises SchemaError for missing or unknown parameter names and
    WordResolutionError for words not present in the term set.
    """
    known = {p.name.lower(): p for p in schema.parameters}
    extra = [k for k in raw if k.lower() not in known]
    if extra:
        raise SchemaError(f"unknown parameters in feedback: {sorted(extra)}")
    lowered = {k.lower(): v for k, v in raw.items()}
    choices = []
    for param in schema.parameters:
        if param.name.lower() not in lowered:
            raise SchemaError(f"feedback is missing parameter {param.name!r}")
        choices.append(param.find(lowered[param.name.lower()]))
    return FeedbackRecord(student_id=student_id, choices=tuple(choices))


def read_feedback_file(path, schema: ParameterSchema | None = None) -> list[RawFeedback]:
    """Read a feedback batch file (see FEEDBACK_HEADER for the layout).

    Word resolution is deferred so that a bad word in one row does not
    abort a batch; pair with pipeline.evaluate_batch for per-row errors.
    """
    schema = schema or build_default_schema()
    if len(schema.parameters) != len(FEEDBACK_COLUMNS):
        raise SchemaError(
            "feedback files support exactly "
            f"{len(FEEDBACK_COLUMNS)} parameters, schema has {len(schema.parameters)}"
        )
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty feedback file") from None
        if tuple(header) != FEEDBACK_HEADER:
            raise SchemaError(
                f"{path}: expected header {','.join(FEEDBACK_HEADER)}, "
                f"got {','.join(header)}"
            )
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(FEEDBACK_HEADER):
                raise SchemaError(f"{path}:{lineno}: expected {len(FEEDBACK_HEADER)} cells")
            words = {
                schema.parameters[i].name: row[i + 1].strip()
                for i in range(len(FEEDBACK_COLUMNS))
            }
            rows.append(RawFeedback(student_id=row[0].strip(), words=words))
    return rows


def format_feedback_file(
    rows: Sequence[RawFeedback], schema: ParameterSchema | None = None
) -> str:
    """Serialize feedback rows back to the batch-file format, bit-exactly
    reproducing files written by this function."""
    schema = schema or build_default_schema()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FEEDBACK_HEADER)
    for row in rows:
        writer.writerow(
            [row.student_id] + [row.words[p.name] for p in schema.parameters]
        )
    return buf.getvalue()


def write_feedback_file(path, rows: Sequence[RawFeedback],
                        schema: ParameterSchema | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(format_feedback_file(rows, schema))
