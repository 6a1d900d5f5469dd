"""Write a generated corpus as a bundle of files the rest of penrank reads."""

import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from penrank.corpus.readers import write_records
from penrank.evaluation.io import write_qrels
from penrank.synth.generator import SynthCorpus, pair_length_mix

logger = logging.getLogger(__name__)

CORPUS_FILE = "corpus.jsonl"
TRAIN_QUERIES_FILE = "train_queries.jsonl"
TEST_QUERIES_FILE = "test_queries.jsonl"
QRELS_FILE = "qrels.tsv"
MANIFEST_FILE = "manifest.yaml"


def build_manifest(corpus: SynthCorpus) -> Dict[str, Any]:
    return {
        "generator": "penrank.synth",
        "seed": corpus.config.seed,
        "config": corpus.config.to_dict(),
        "documents": len(corpus.documents),
        "pairs": len(corpus.pairs),
        "train_queries": len(corpus.train_ids),
        "test_queries": len(corpus.test_ids),
        "mean_length": round(corpus.mean_length, 4),
        "pair_length_mix": {
            "train": pair_length_mix(corpus, "train"),
            "test": pair_length_mix(corpus, "test"),
        },
        "files": {
            "corpus": CORPUS_FILE,
            "train_queries": TRAIN_QUERIES_FILE,
            "test_queries": TEST_QUERIES_FILE,
            "qrels": QRELS_FILE,
        },
    }


def write_corpus_bundle(corpus: SynthCorpus, out_dir: Union[str, Path]) -> Dict[str, Path]:
    """Write corpus, query splits, judgments and a manifest under ``out_dir``.

    Output depends only on the corpus, so the same seed gives byte-identical files.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    paths = {
        "corpus": write_records(corpus.documents, out_dir / CORPUS_FILE),
        "train_queries": write_records(corpus.queries("train"), out_dir / TRAIN_QUERIES_FILE),
        "test_queries": write_records(corpus.queries("test"), out_dir / TEST_QUERIES_FILE),
        "qrels": write_qrels(corpus.qrels, out_dir / QRELS_FILE),
    }

    manifest_path = out_dir / MANIFEST_FILE
    with open(manifest_path, "w", encoding="utf-8") as f:
        yaml.safe_dump(build_manifest(corpus), f, default_flow_style=False, sort_keys=False)
    paths["manifest"] = manifest_path

    logger.info(f"Wrote synthetic corpus bundle to {out_dir}")
    return paths
