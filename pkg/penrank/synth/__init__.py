"""Synthetic penpal corpus generation."""

from penrank.synth.generator import (
    LONG_LONG,
    MIXED,
    PAIR_KINDS,
    SHORT_SHORT,
    SynthConfig,
    SynthCorpus,
    SynthPair,
    generate_corpus,
    pair_length_mix,
    pseudo_words,
)
from penrank.synth.writers import build_manifest, write_corpus_bundle

__all__ = [
    "LONG_LONG",
    "MIXED",
    "PAIR_KINDS",
    "SHORT_SHORT",
    "SynthConfig",
    "SynthCorpus",
    "SynthPair",
    "generate_corpus",
    "pair_length_mix",
    "pseudo_words",
    "build_manifest",
    "write_corpus_bundle",
]
