# File Name: `utls.py`
# Purpose: Houses constants, exceptions, report types, and helper functions
#     that need to be accessed by multiple modules in this python package.
# Creation Date: 2026-10-19 09:10 AM EDT
# Update History:
# - 2026-10-19 09:10 AM EDT


import logging
from dataclasses import dataclass, field
from os import makedirs
from os.path import exists, expanduser

import pandas as pd

# In-band marker for an undefined entry of a partial operation.
UNDEFINED = -1

# One machine word per subset.
MAX_CARRIER_SIZE = 64

DEFAULT_WITNESS_CAP = 10


class StructureError(ValueError):
    """
    Raised when the raw data of a structure is malformed
    (dimension mismatch, carrier too large, bad indices).
    """


class PreconditionError(ValueError):
    """
    Raised when an operation is called outside of its precondition.
    """


class PartialityError(LookupError):
    """
    Raised when a partial join or meet that an operation needs is UNDEFINED.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NotOrthomodularError(PreconditionError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotIdempotentError(PreconditionError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class HypothesisError(PreconditionError):
    """
    Raised when an unsharp residuated poset does not satisfy one of the
    two extra hypotheses needed to recover an orthomodular poset.

    `hypothesis` is either `"i"` (meets of orthogonal-complement pairs)
    or `"ii"` (the implication table agrees with `x' v L(x,y)`).
    """

    def __init__(self, message: str, hypothesis: str, witness: tuple = ()):
        super().__init__(message)
        self.hypothesis = hypothesis
        self.witness = witness


class NotUnsharpResiduatedError(PreconditionError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class StructureFileError(ValueError):
    def __init__(self, message: str, line_number: int = 0, report=None):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
        self.reason = message
        self.report = report


class TheoremViolationError(AssertionError):
    def __init__(self, message: str, serialized: str = ""):
        super().__init__(message)
        self.serialized = serialized


@dataclass(frozen=True)
class LawVerdict:
    """
    The verdict for a single law.

    `witnesses` holds at most `witness_cap` concrete counterexamples
    (tuples of element indices); `n_violations` counts all of them.
    Informational verdicts never make a report fail.
    """

    law: str
    passed: bool
    witnesses: tuple = ()
    n_violations: int = 0
    informational: bool = False
    detail: str = ""

    def render(self, labels: tuple | None = None) -> str:
        if self.informational:
            status = "info" if self.n_violations else "pass"
        else:
            status = "pass" if self.passed else "FAIL"
        line = f"{self.law}: {status}"
        if self.n_violations:
            shown = ", ".join(
                _render_witness(w, labels) for w in self.witnesses
            )
            line += f" ({self.n_violations} instance(s); e.g. {shown})"
        if self.detail:
            line += f" [{self.detail}]"
        return line


def _render_witness(witness: tuple, labels: tuple | None = None) -> str:
    if labels is None:
        return "(" + ",".join(str(w) for w in witness) + ")"
    parts = []
    for w in witness:
        if isinstance(w, int) and 0 <= w < len(labels):
            parts.append(labels[w])
        else:
            parts.append(str(w))
    return "(" + ",".join(parts) + ")"


class _WitnessCollector:
    """
    Collects every violation of a law without short-circuiting,
    keeping the first `cap` witnesses.
    """

    def __init__(
        self,
        law: str,
        cap: int = DEFAULT_WITNESS_CAP,
        informational: bool = False,
    ):
        self.law = law
        self.cap = cap
        self.informational = informational
        self.count = 0
        self.witnesses = []

    def add(self, *witness) -> None:
        self.count += 1
        if len(self.witnesses) < self.cap:
            self.witnesses.append(tuple(witness))

    def verdict(self, detail: str = "") -> LawVerdict:
        if self.count and not detail and self.informational:
            detail = "informational"
        return LawVerdict(
            law=self.law,
            passed=self.count == 0,
            witnesses=tuple(self.witnesses),
            n_violations=self.count,
            informational=self.informational,
            detail=detail,
        )


@dataclass
class ValidationReport:
    """
    Per-law verdicts with concrete counterexample witnesses.

    A report passes when none of its non-informational verdicts fail.
    Merging two reports concatenates their verdicts, so merging is
    associative.
    """

    title: str = ""
    verdicts: list = field(default_factory=list)
    labels: tuple | None = None
    structure: object = None

    def add(self, verdict: LawVerdict) -> "ValidationReport":
        self.verdicts.append(verdict)
        return self

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        merged = type(self)(
            title=self.title or other.title,
            verdicts=list(self.verdicts) + list(other.verdicts),
            labels=self.labels if self.labels is not None else other.labels,
            structure=self.structure,
        )
        return merged

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> list:
        return [
            v for v in self.verdicts if not v.passed and not v.informational
        ]

    @property
    def informational(self) -> list:
        return [v for v in self.verdicts if v.informational]

    @property
    def n_violations(self) -> int:
        return sum(v.n_violations for v in self.failures)

    @property
    def laws(self) -> list:
        return [v.law for v in self.verdicts]

    def __getitem__(self, law: str) -> LawVerdict:
        for v in self.verdicts:
            if v.law == law:
                return v
        raise KeyError(f"No verdict for the law `{law}` in this report.")

    def __contains__(self, law: str) -> bool:
        return any(v.law == law for v in self.verdicts)

    def __len__(self) -> int:
        return len(self.failures)

    def to_dataframe(self) -> pd.DataFrame:
        rows = []
        for v in self.verdicts:
            rows.append(
                {
                    "law": v.law,
                    "passed": v.passed,
                    "informational": v.informational,
                    "n_violations": v.n_violations,
                    "witnesses": "; ".join(
                        _render_witness(w, self.labels) for w in v.witnesses
                    ),
                    "detail": v.detail,
                }
            )
        return pd.DataFrame(
            rows,
            columns=[
                "law",
                "passed",
                "informational",
                "n_violations",
                "witnesses",
                "detail",
            ],
        )

    def to_text(self) -> str:
        lines = []
        if self.title:
            lines.append(f"# {self.title}")
        for v in self.verdicts:
            lines.append(v.render(self.labels))
        verdict = "pass" if self.passed else "fail"
        lines.append(f"RESULT {verdict} {self.n_violations}")
        return "\n".join(lines)


def _format_folder_str(folder_str: str) -> str:
    folder_str = folder_str.replace("\\", "/")
    folder_str = folder_str.replace("//", "/")
    return folder_str


def _get_cache_dir(*subfolders: str) -> str:
    """
    Returns (and creates, if needed) a folder under
    `~/.orthomodular_py/`.
    """
    home_dir = expanduser("~")
    home_dir = _format_folder_str(home_dir)
    folder = f"{home_dir}/.orthomodular_py/"
    for s in subfolders:
        folder += f"{s}/"

    if exists(folder):
        pass
    else:
        logging.info(f"Creating cache folder `{folder}`.")
        makedirs(folder)

    return folder
