"""Exception hierarchy for penrank.

Every error raised on purpose by the library derives from ``PenrankError``.
The ``exit_code`` attribute is what the CLI exits with when the error
reaches it.
"""


class PenrankError(Exception):
    """Base class for penrank errors."""
    exit_code = 1


class InputFileError(PenrankError):
    """An input file is missing or cannot be read."""
    exit_code = 3


class MalformedInputError(PenrankError):
    """An input file exists but its content cannot be decoded."""
    exit_code = 4


class ParameterError(PenrankError, ValueError):
    """A parameter value is out of bounds or unknown."""
    exit_code = 5


class DataError(PenrankError):
    """Corpus, index or judgment data is inconsistent."""
    exit_code = 6


class CurveDomainError(ParameterError):
    """A curve evaluation left the real domain (non-positive base or non-finite value)."""


class IndexFileMissingError(InputFileError):
    """No index file exists at the given path."""


class IndexFileMalformedError(MalformedInputError):
    """The index file is truncated or corrupt."""


class IndexVersionError(MalformedInputError):
    """The index file was written by an incompatible format version."""


class DuplicateDocumentError(DataError):
    """Two documents share an id."""

    def __init__(self, doc_id: str):
        super().__init__(f"Duplicate document id: {doc_id!r}")
        self.doc_id = doc_id


class UnknownDocumentError(DataError, KeyError):
    """A document id is not present in the index."""

    def __init__(self, doc_id: str):
        super().__init__(f"Unknown document id: {doc_id!r}")
        self.doc_id = doc_id

    def __str__(self) -> str:
        return self.args[0]


class QrelsError(DataError):
    """Relevance judgments do not cover a query being evaluated."""


class SynthConfigError(DataError):
    """A synthetic corpus configuration cannot be realized."""


EXIT_CODES_HELP = (
    "Exit codes: 0 success; 1 unexpected error; 2 usage error (unknown flag or "
    "scorer); 3 missing/unreadable input file; 4 malformed input file or index "
    "version mismatch; 5 invalid parameters; 6 inconsistent data (duplicate ids, "
    "unknown documents, queries missing from qrels, infeasible synth config); "
    "7 verify found a failing constraint."
)

CONSTRAINT_FAILURE_EXIT_CODE = 7
