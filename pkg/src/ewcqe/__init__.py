"""Text retrieval toolkit: inverted index, TF-IDF/BM25/InL2 ranking, Bo1
pseudo-relevance feedback with EWC semantic term selection, and trec_eval-style
metrics."""

__version__ = "0.1.0"
