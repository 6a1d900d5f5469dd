"""JSON-lines corpus and query files.

One record per line: ``{"id": "...", "text": "..."}``, UTF-8 encoded.
Blank lines are skipped.
"""

import json
import logging
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from penrank.corpus.tokenizer import TokenizerConfig, tokenize
from penrank.errors import InputFileError, MalformedInputError
from penrank.models import Query

logger = logging.getLogger(__name__)


def read_records(path: Union[str, Path]) -> List[Tuple[str, str]]:
    """Read ``(id, text)`` records from a JSON-lines file."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
    except FileNotFoundError:
        raise InputFileError(f"File not found: {path}") from None
    except OSError as e:
        raise InputFileError(f"Cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise MalformedInputError(f"{path} is not valid UTF-8: {e}") from e

    records = []
    for line_no, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
            doc_id, text = data["id"], data["text"]
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise MalformedInputError(f"{path}, line {line_no}: expected an object with 'id' and 'text' ({e})") from e
        if not isinstance(doc_id, str) or not isinstance(text, str):
            raise MalformedInputError(f"{path}, line {line_no}: 'id' and 'text' must be strings")
        records.append((doc_id, text))

    logger.debug(f"Read {len(records)} records from {path}")
    return records


def write_records(records: Iterable[Tuple[str, str]], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for doc_id, text in records:
            f.write(json.dumps({"id": doc_id, "text": text}, ensure_ascii=False) + "\n")
    return path


def make_queries(records: Iterable[Tuple[str, str]],
                 config: TokenizerConfig = TokenizerConfig()) -> List[Query]:
    return [Query.from_tokens(query_id, tokenize(text, config)) for query_id, text in records]


def load_queries(path: Union[str, Path], config: TokenizerConfig = TokenizerConfig()) -> List[Query]:
    """Read a query file and preprocess each query with ``config``."""
    return make_queries(read_records(path), config)
