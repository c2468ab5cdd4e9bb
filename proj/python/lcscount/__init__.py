"""Length and exact counts of longest common subsequences.

Inputs may be ``str`` (compared by code point), ``bytes`` (by byte), or any
sequence of hashable items, which are interned jointly for both sides.
Counts come back as Python ``int`` and are exact at any size.
"""

from . import _lcscount

__all__ = [
    "lcs_length",
    "count_distinct",
    "count_embeddings",
    "summarize",
    "oracle_distinct",
    "oracle_embeddings",
    "run_cli",
]


def _encode_pair(a, b):
    if isinstance(a, str) and isinstance(b, str):
        return [ord(c) for c in a], [ord(c) for c in b]
    if isinstance(a, (bytes, bytearray)) and isinstance(b, (bytes, bytearray)):
        return list(a), list(b)
    ids = {}
    encode = lambda seq: [ids.setdefault(item, len(ids)) for item in seq]
    return encode(a), encode(b)


def lcs_length(a, b):
    return _lcscount.lcs_length(*_encode_pair(a, b))


def count_distinct(a, b, algorithm="linear"):
    """Return ``(lcs_length, number_of_distinct_lcs_strings)``."""
    return _lcscount.count_distinct(*_encode_pair(a, b), algorithm)


def count_embeddings(a, b, algorithm="linear"):
    """Return ``(lcs_length, number_of_lcs_embeddings)``."""
    return _lcscount.count_embeddings(*_encode_pair(a, b), algorithm)


def summarize(a, b, distinct=True, embeddings=True, algorithm="linear"):
    return _lcscount.summarize(*_encode_pair(a, b), distinct, embeddings, algorithm)


def oracle_distinct(a, b):
    return _lcscount.oracle_distinct(*_encode_pair(a, b))


def oracle_embeddings(a, b):
    return _lcscount.oracle_embeddings(*_encode_pair(a, b))


def run_cli(args, stdin=""):
    """Run the ``lcscount`` command in-process; returns ``(exit_code, stdout, stderr)``."""
    return _lcscount.run_cli(list(args), stdin)
