"""Seeded corpora behind the identity and inequality acceptance runs."""

from permlab.corpus.interfaces import CorpusSummary, CorpusViolation
from permlab.corpus.utils import check_identities, run_corpus, run_parallel

__all__ = [
    "CorpusSummary",
    "CorpusViolation",
    "check_identities",
    "run_corpus",
    "run_parallel",
]
