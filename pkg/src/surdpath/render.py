"""Bounded trees and serialisation of traces, expansions and reports.

Three output formats:

* ``text``: stable human-readable listing.
* ``dot``: graphviz digraph; node ids are ``n`` followed by the L/R path from
  the root, edges run parent -> child and LPP edges carry ``penwidth=2``.
* ``json``: compact, key-sorted documents tagged ``"schema": "surdpath-v1"``
  and a ``"kind"``; see ``schema/surdpath-v1.json``.

All emitters return bytes and are deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import singledispatch
from typing import Union

from .cf import CfExpansion, DirectionRun, GaloisReport, LegendreReport
from .core import QuadraticSurd, format_surd, left_child, right_child
from .errors import DepthCapExceeded, UnsupportedFormat
from .lpp import (
    IrrationalityCertificate,
    L,
    LppTrace,
    PalindromeReport,
    lpp_step,
)
from .oracle import oracle_decimal

SCHEMA = "surdpath-v1"
DEFAULT_DEPTH_CAP = 12
FORMATS = ("text", "dot", "json")

Label = Union[QuadraticSurd, Fraction]


@dataclass
class TreeNode:
    label: Label
    depth: int
    path: str = ""
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    on_lpp: bool = False

    @property
    def children(self):
        if self.left is None:
            return None
        return self.left, self.right

    def walk(self):
        """Nodes in breadth-first order."""
        queue = deque([self])
        while queue:
            node = queue.popleft()
            yield node
            if node.left is not None:
                queue.append(node.left)
                queue.append(node.right)


def _children(x: Label) -> tuple[Label, Label]:
    if isinstance(x, Fraction):
        return x / (x + 1), x + 1
    return left_child(x), right_child(x)


def _lpp_root(x: Label) -> bool:
    return isinstance(x, QuadraticSurd) and x.eps == 1 and x.c * x.c < x.N


def build_tree(root: Label, depth: int, cap: int = DEFAULT_DEPTH_CAP) -> TreeNode:
    """Complete binary tree of the given depth below ``root``, LPP edges flagged."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth > cap:
        raise DepthCapExceeded(f"depth {depth} exceeds cap {cap}")
    top = TreeNode(root, 0, "", on_lpp=_lpp_root(root))
    frontier = [top]
    for level in range(1, depth + 1):
        nxt = []
        for node in frontier:
            lx, rx = _children(node.label)
            lpp_dir = lpp_step(node.label)[0] if node.on_lpp else None
            node.left = TreeNode(lx, level, node.path + "L", on_lpp=lpp_dir is L)
            node.right = TreeNode(rx, level, node.path + "R", on_lpp=lpp_dir is not None and lpp_dir is not L)
            nxt += [node.left, node.right]
        frontier = nxt
    return top


def classic_cw_sequence(n: int) -> list[Fraction]:
    """First n labels of the rational Calkin-Wilf tree in breadth-first order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    queue = deque([Fraction(1)])
    while len(out) < n:
        x = queue.popleft()
        out.append(x)
        queue.extend(_children(x))
    return out


def label_text(x: Label) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return format_surd(x)


def _surd_json(x: QuadraticSurd, annotate: bool = False) -> dict:
    out = {"N": x.N, "eps": x.eps, "c": x.c, "d": x.d, "text": format_surd(x)}
    if annotate:
        out["approx"] = oracle_decimal(x, 12)
    return out


def _label_json(x: Label, annotate: bool = False) -> dict:
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator, "text": str(x)}
    return _surd_json(x, annotate)


# --- JSON payloads ---------------------------------------------------------


@singledispatch
def to_document(view, annotate: bool = False) -> dict:
    raise UnsupportedFormat(f"cannot serialise {type(view).__name__}")


@to_document.register
def _(view: TreeNode, annotate: bool = False) -> dict:
    def node(t: TreeNode) -> dict:
        out = {
            "id": "n" + t.path,
            "depth": t.depth,
            "on_lpp": t.on_lpp,
            "label": _label_json(t.label, annotate),
        }
        if t.left is not None:
            out["children"] = [node(t.left), node(t.right)]
        return out

    return {"kind": "tree", "root": node(view)}


@to_document.register
def _(view: LppTrace, annotate: bool = False) -> dict:
    return {
        "kind": "lpp_trace",
        "root": _surd_json(view.root, annotate),
        "period": view.period,
        "symmetry_index": view.symmetry_index,
        "c": view.c_seq,
        "d": view.d_seq,
        "steps": "".join(s.value for s in view.steps),
        "nodes": [_surd_json(x, annotate) for x in view.nodes],
    }


@to_document.register
def _(view: CfExpansion, annotate: bool = False) -> dict:
    return {
        "kind": "cf_expansion",
        "x": _surd_json(view.x, annotate),
        "terms": view.terms,
        "period_start": view.period_start,
        "period_len": view.period_len,
    }


@to_document.register
def _(view: PalindromeReport, annotate: bool = False) -> dict:
    return {
        "kind": "palindrome_report",
        "symmetry_index": view.symmetry_index,
        "steps_palindrome": view.steps_palindrome,
        "c_antisymmetric": view.c_antisymmetric,
        "d_symmetric": view.d_symmetric,
        "middle_index": view.middle_index,
        "middle_zero": view.middle_zero,
        "neg_conjugate_closed": view.neg_conjugate_closed,
        "full_palindrome": view.full_palindrome,
        "passed": view.passed,
    }


@to_document.register
def _(view: IrrationalityCertificate, annotate: bool = False) -> dict:
    return {
        "kind": "certificate",
        "index_a": view.index_a,
        "index_b": view.index_b,
        "repeated": _surd_json(view.repeated, annotate),
    }


@to_document.register
def _(view: LegendreReport, annotate: bool = False) -> dict:
    return {
        "kind": "legendre_report",
        "R": str(view.R),
        "alpha": _surd_json(view.alpha, annotate),
        "a0": view.a0,
        "period": view.period,
        "preperiod_is_a0": view.preperiod_is_a0,
        "interior_palindrome": view.interior_palindrome,
        "terminal_twice_a0": view.terminal_twice_a0,
        "passed": view.passed,
    }


@to_document.register
def _(view: GaloisReport, annotate: bool = False) -> dict:
    return {
        "kind": "galois_report",
        "x": _surd_json(view.x, annotate),
        "alpha": _surd_json(view.alpha, annotate),
        "period": view.period,
        "alpha_period": view.alpha_period,
        "lpp_m": view.lpp_m,
        "lpp_t": view.lpp_t,
        "x_lpp_m": view.x_lpp_m,
        "x_lpp_t": view.x_lpp_t,
        "horizon": view.horizon,
        "checks": {
            "purely_periodic": view.purely_periodic,
            "reversal": view.reversal,
            "a_equals_t": view.a_equals_t,
            "parity_chain": view.parity_chain,
            "reverse_reading": view.reverse_reading,
            "m_even": view.m_even,
        },
        "passed": view.passed,
    }


@to_document.register
def _(view: list, annotate: bool = False) -> dict:
    if not all(isinstance(r, DirectionRun) for r in view):
        raise UnsupportedFormat("only lists of DirectionRun can be serialised")
    return {
        "kind": "direction_runs",
        "runs": [
            {"y": _surd_json(r.y, annotate), "orientation": r.orientation.value, "t": r.t, "index": r.index}
            for r in view
        ],
    }


# --- text ------------------------------------------------------------------


def _flag(v) -> str:
    return "n/a" if v is None else ("PASS" if v else "FAIL")


@singledispatch
def to_text(view) -> str:
    raise UnsupportedFormat(f"no text form for {type(view).__name__}")


@to_text.register
def _(view: TreeNode) -> str:
    lines = []

    def rec(t: TreeNode):
        mark = "*" if t.on_lpp else " "
        lines.append(f"{'  ' * t.depth}{mark} {t.path or '.'}: {label_text(t.label)}")
        if t.left is not None:
            rec(t.left)
            rec(t.right)

    rec(view)
    return "\n".join(lines) + "\n"


@to_text.register
def _(view: LppTrace) -> str:
    m = view.symmetry_index
    lines = [f"LPP of {format_surd(view.root)}: T={view.period} m={'absent' if m is None else m}"]
    # zigzag: a right step moves the label right, a left step moves it left
    pos = [0]
    for s in view.steps:
        pos.append(pos[-1] + (2 if s.value == "r" else -2))
    base = min(pos)
    for n, x in enumerate(view.nodes):
        step = f"  {view.steps[n]}" if n < view.period else ""
        lines.append(f"{' ' * (pos[n] - base)}x{n} = {format_surd(x)}{step}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(view: CfExpansion) -> str:
    pre = ", ".join(map(str, view.preperiod))
    per = ", ".join(map(str, view.period))
    body = f"[{pre}; ({per})]" if pre else f"[({per})]"
    return (
        f"CF of {format_surd(view.x)} = {body}\n"
        f"period_start={view.period_start} period_len={view.period_len} "
        f"least_period_len={view.least_period_len}\n"
    )


@to_text.register
def _(view: PalindromeReport) -> str:
    if view.symmetry_index is None:
        lines = ["no symmetry index"]
    else:
        lines = [
            f"symmetry index m={view.symmetry_index}",
            f"steps s_0..s_(m-1) palindrome: {_flag(view.steps_palindrome)}",
            f"c antisymmetric: {_flag(view.c_antisymmetric)}",
            f"d symmetric: {_flag(view.d_symmetric)}",
        ]
        if view.middle_index is not None:
            lines.append(
                f"c_{view.middle_index} = 0: {_flag(view.middle_zero)}"
                f" (x_{view.middle_index} = {format_surd(view.middle_node)})"
            )
        lines.append(f"-x* of every node on the path: {_flag(view.neg_conjugate_closed)}")
    lines.append(f"full-period palindrome: {_flag(view.full_palindrome)}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(view: IrrationalityCertificate) -> str:
    return f"certificate: x_{view.index_a} = x_{view.index_b} = {format_surd(view.repeated)}\n"


@to_text.register
def _(view: LegendreReport) -> str:
    return (
        f"sqrt({view.R}) via {format_surd(view.alpha)}: a0={view.a0} period={view.period}\n"
        f"preperiod is a0: {_flag(view.preperiod_is_a0)}\n"
        f"interior palindrome: {_flag(view.interior_palindrome)}\n"
        f"last term 2*a0: {_flag(view.terminal_twice_a0)}\n"
    )


@to_text.register
def _(view: GaloisReport) -> str:
    return (
        f"x = {format_surd(view.x)}, -1/x* = {format_surd(view.alpha)}\n"
        f"CF(x) period {view.period}, CF(-1/x*) period {view.alpha_period}\n"
        f"LPP of -1/x*: m={view.lpp_m} t={view.lpp_t}\n"
        f"LPP of x: m={view.x_lpp_m} t'={view.x_lpp_t}\n"
        f"purely periodic: {_flag(view.purely_periodic)}\n"
        f"reversal: {_flag(view.reversal)}\n"
        f"a_n = t_n ({view.horizon} terms): {_flag(view.a_equals_t)}\n"
        f"complete quotients vs -y_n*: {_flag(view.parity_chain)}\n"
        f"reverse reading of t': {_flag(view.reverse_reading)}\n"
        f"m even: {_flag(view.m_even)}\n"
    )


@to_text.register
def _(view: list) -> str:
    return "".join(f"y{n} = {format_surd(r.y)}  {r.orientation}  t={r.t}\n" for n, r in enumerate(view))


# --- dot -------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _tree_dot(view: TreeNode) -> str:
    lines = ["digraph cw {", "  node [shape=plaintext];"]
    for t in view.walk():
        lines.append(f"  n{t.path} [label={_dot_quote(label_text(t.label))}];")
    for t in view.walk():
        for child in (t.left, t.right):
            if child is not None:
                attr = " [penwidth=2]" if child.on_lpp else ""
                lines.append(f"  n{t.path} -> n{child.path}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _trace_dot(view: LppTrace) -> str:
    lines = ["digraph lpp {", "  node [shape=plaintext];"]
    path = ""
    ids = []
    for n, x in enumerate(view.nodes):
        ids.append("n" + path)
        lines.append(f"  n{path} [label={_dot_quote(format_surd(x))}];")
        if n < view.period:
            path += "L" if view.steps[n] is L else "R"
    for a, b in zip(ids, ids[1:]):
        lines.append(f"  {a} -> {b} [penwidth=2];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(view, fmt: str = "text", annotate: bool = False) -> bytes:
    """Serialise a tree, trace, expansion or report to bytes."""
    if fmt == "json":
        doc = {"schema": SCHEMA, **to_document(view, annotate)}
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt == "text":
        return to_text(view).encode()
    if fmt == "dot":
        if isinstance(view, TreeNode):
            return _tree_dot(view).encode()
        if isinstance(view, LppTrace):
            return _trace_dot(view).encode()
        raise UnsupportedFormat(f"dot output is only available for trees and traces, not {type(view).__name__}")
    raise UnsupportedFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
