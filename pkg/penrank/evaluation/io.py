"""Qrels and run file reading/writing.

Qrels lines are ``query_id<TAB>doc_id<TAB>relevance`` with relevance 0 or 1;
lines with relevance 0 are ignored. Run lines are
``query_id<TAB>doc_id<TAB>rank<TAB>score``.
"""

import logging
from pathlib import Path
from typing import Dict, List, Tuple, Union

from penrank.errors import InputFileError, MalformedInputError
from penrank.models import Qrels, RunResult, ScoredList

logger = logging.getLogger(__name__)


def _read_lines(path: Path) -> List[str]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read().splitlines()
    except FileNotFoundError:
        raise InputFileError(f"File not found: {path}") from None
    except OSError as e:
        raise InputFileError(f"Cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise MalformedInputError(f"{path} is not valid UTF-8: {e}") from e


def read_qrels(path: Union[str, Path]) -> Qrels:
    path = Path(path)
    pairs = []
    for line_no, line in enumerate(_read_lines(path), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedInputError(f"{path}, line {line_no}: expected 3 tab-separated fields, got {len(fields)}")
        query_id, doc_id, relevance = (f.strip() for f in fields)
        if relevance not in ("0", "1"):
            raise MalformedInputError(f"{path}, line {line_no}: relevance must be 0 or 1, got {relevance!r}")
        if relevance == "1":
            pairs.append((query_id, doc_id))
    qrels = Qrels.from_pairs(pairs)
    logger.debug(f"Read judgments for {len(qrels)} queries from {path}")
    return qrels


def write_qrels(qrels: Qrels, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for query_id in qrels.query_ids:
            for doc_id in sorted(qrels.relevant(query_id)):
                f.write(f"{query_id}\t{doc_id}\t1\n")
    return path


def read_run(path: Union[str, Path]) -> RunResult:
    """Read a run file back into ranked lists, preserving query order of first appearance."""
    path = Path(path)
    entries: Dict[str, List[Tuple[int, str, float]]] = {}
    for line_no, line in enumerate(_read_lines(path), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        try:
            query_id, doc_id, position, score = fields
            entries.setdefault(query_id, []).append((int(position), doc_id, float(score)))
        except ValueError as e:
            raise MalformedInputError(f"{path}, line {line_no}: expected query_id, doc_id, rank, score ({e})") from e

    results = []
    for query_id, rows in entries.items():
        rows.sort()
        results.append(ScoredList(query_id, tuple((doc_id, score) for _, doc_id, score in rows)))
    return RunResult(tuple(results))
