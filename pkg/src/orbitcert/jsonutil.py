"""Canonical JSON encoding.

All persisted values use one byte-stable form: keys sorted, no whitespace,
no floats (rationals travel as "p/q" strings), vertices as scalars or nested
lists.  Two structurally equal values always serialize to identical bytes,
which is what the certificate involution and hashing tests rely on.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import MalformedInputError


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fraction_from_str(s: str) -> Fraction:
    try:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"not a rational 'p/q': {s!r}") from exc


def vertex_to_json(v):
    """Vertices are ints, strings, or (nested) tuples of those."""
    if isinstance(v, tuple):
        return [vertex_to_json(c) for c in v]
    if isinstance(v, (int, str)):
        return v
    raise MalformedInputError(f"unencodable vertex {v!r}")


def vertex_from_json(j):
    if isinstance(j, list):
        return tuple(vertex_from_json(c) for c in j)
    if isinstance(j, (int, str)):
        return j
    raise MalformedInputError(f"unrecognized vertex encoding {j!r}")


def json_key(v) -> str:
    """Stable string key for using a vertex as a JSON object key."""
    return dumps_canonical(vertex_to_json(v))


def sort_key(v):
    """Total order on vertices: ints numerically, then strings, then tuples."""
    if isinstance(v, bool):
        raise MalformedInputError("boolean vertices are not supported")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(sort_key(c) for c in v))
    raise MalformedInputError(f"unorderable vertex {v!r}")
