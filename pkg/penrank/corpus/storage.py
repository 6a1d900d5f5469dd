"""Index persistence.

The index file is JSON lines: a header naming the format, version and
record counts, one stats line, one line per document, one line per term,
then an end marker. ``avgdl`` is stored as a float hex string so a
save/load round trip reproduces it bit for bit.
"""

import json
import logging
from pathlib import Path
from types import MappingProxyType
from typing import Any, Dict, List, Union

from penrank.corpus.index import CorpusStats, InvertedIndex, Posting
from penrank.corpus.tokenizer import TokenizerConfig
from penrank.errors import IndexFileMalformedError, IndexFileMissingError, IndexVersionError

logger = logging.getLogger(__name__)

INDEX_FORMAT = "penrank-index"
INDEX_VERSION = 1


def save_index(index: InvertedIndex, path: Union[str, Path]) -> Path:
    """Write ``index`` to ``path`` and return the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    header = {
        "format": INDEX_FORMAT,
        "version": INDEX_VERSION,
        "num_docs": index.stats.num_docs,
        "num_terms": len(index.postings),
    }
    stats = {
        "avgdl": index.stats.avgdl.hex(),
        "total_tokens": index.stats.total_tokens,
        "tokenizer": index.tokenizer.to_dict(),
    }

    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(header) + "\n")
        f.write(json.dumps(stats, ensure_ascii=False) + "\n")
        for doc_id in index.doc_ids:
            f.write(json.dumps({"doc": doc_id, "length": index.doc_lengths[doc_id]}, ensure_ascii=False) + "\n")
        for term, plist in index.postings.items():
            record = {"term": term, "postings": [[p.doc_id, p.tf] for p in plist]}
            f.write(json.dumps(record, ensure_ascii=False) + "\n")
        f.write(json.dumps({"end": True}) + "\n")

    logger.info(f"Saved index with {header['num_docs']} documents to {path}")
    return path


def _decode_lines(path: Path) -> List[Dict[str, Any]]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
    except FileNotFoundError:
        raise IndexFileMissingError(f"Index file not found: {path}") from None
    except IsADirectoryError:
        raise IndexFileMissingError(f"Index path is a directory: {path}") from None
    except UnicodeDecodeError as e:
        raise IndexFileMalformedError(f"Index file {path} is not valid UTF-8: {e}") from e

    records = []
    for line_no, line in enumerate(lines, 1):
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as e:
            raise IndexFileMalformedError(f"Index file {path}, line {line_no}: {e}") from e
    return records


def load_index(path: Union[str, Path]) -> InvertedIndex:
    """Read an index written by ``save_index``."""
    path = Path(path)
    records = _decode_lines(path)

    if not records or not isinstance(records[0], dict) or records[0].get("format") != INDEX_FORMAT:
        raise IndexFileMalformedError(f"{path} is not a penrank index file")
    header = records[0]
    if header.get("version") != INDEX_VERSION:
        raise IndexVersionError(
            f"Index file {path} has format version {header.get('version')!r}, "
            f"this build reads version {INDEX_VERSION}"
        )

    try:
        num_docs = int(header["num_docs"])
        num_terms = int(header["num_terms"])
        expected = 2 + num_docs + num_terms + 1
        if len(records) != expected or records[-1] != {"end": True}:
            raise IndexFileMalformedError(
                f"Index file {path} is truncated: expected {expected} records, found {len(records)}"
            )

        stats_record = records[1]
        doc_lengths = {}
        for record in records[2:2 + num_docs]:
            doc_lengths[str(record["doc"])] = int(record["length"])

        postings = {}
        collection_tf = {}
        for record in records[2 + num_docs:2 + num_docs + num_terms]:
            plist = tuple(Posting(str(doc_id), int(tf)) for doc_id, tf in record["postings"])
            postings[record["term"]] = plist
            collection_tf[record["term"]] = sum(p.tf for p in plist)

        stats = CorpusStats(
            num_docs=num_docs,
            avgdl=float.fromhex(stats_record["avgdl"]),
            total_tokens=int(stats_record["total_tokens"]),
            collection_tf=MappingProxyType(dict(sorted(collection_tf.items()))),
        )
        tokenizer = TokenizerConfig.from_dict(stats_record["tokenizer"])
    except IndexFileMalformedError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise IndexFileMalformedError(f"Index file {path} is malformed: {e}") from e

    if len(doc_lengths) != num_docs:
        raise IndexFileMalformedError(f"Index file {path} repeats a document id")

    index = InvertedIndex(postings=postings, doc_lengths=doc_lengths, stats=stats, tokenizer=tokenizer)
    logger.info(f"Loaded index with {num_docs} documents from {path}")
    return index
