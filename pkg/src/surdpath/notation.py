"""Parsing of the surd notation used on the command line and in output.

Accepted forms (whitespace ignored)::

    sqrt(N)   sqrt(N)/q   (sqrt(N)+p)/q   (sqrt(N)-p)/q   (-sqrt(N)+c)/d

``format_surd`` in ``core`` produces the canonical spelling; parsing it back
gives the same surd.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import QuadraticSurd, format_surd  # noqa: F401  (re-exported)

_BODY = r"(?P<neg>-)?sqrt\((?P<N>\d+)\)(?:(?P<sign>[+-])(?P<c>\d+))?"
_PAREN = re.compile(rf"\({_BODY}\)(?:/(?P<d>\d+))?")
_BARE = re.compile(rf"{_BODY}(?:/(?P<d>\d+))?")


def parse_surd(text: str) -> QuadraticSurd:
    s = "".join(text.split())
    m = _PAREN.fullmatch(s) or _BARE.fullmatch(s)
    if m is None:
        raise ValueError(f"cannot parse surd {text!r}; expected e.g. '(sqrt(19)+4)/3'")
    if m.re is _BARE and m["sign"] and m["d"]:
        # sqrt(N)+p/q would silently mean sqrt(N) + (p/q)
        raise ValueError(f"ambiguous surd {text!r}; write '(sqrt(N)+p)/q'")
    c = int(m["c"] or 0)
    if m["sign"] == "-":
        c = -c
    return QuadraticSurd(int(m["N"]), -1 if m["neg"] else 1, c, int(m["d"] or 1))


def parse_rational(text: str) -> Fraction:
    s = "".join(text.split())
    m = re.fullmatch(r"(\d+)(?:/(\d+))?", s)
    if m is None:
        raise ValueError(f"cannot parse rational {text!r}; expected 'f/g' or 'f'")
    if m[2] is not None and int(m[2]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m[1]), int(m[2] or 1))
